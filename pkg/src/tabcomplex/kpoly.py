"""K-polynomials of tableau complexes.

Four routes to the same polynomial in the variables ``t[(x)!y]``, one per
pair ``(x, y)`` of the ambient relation (phantom and cone pairs included):

* ``kpoly_faces``     - sum over all faces;
* ``kpoly_interior``  - alternating sum over interior faces (balls/spheres);
* ``kpoly_shelling``  - sum over facets using minimal new faces;
* ``kpoly_recursive`` - deletion/star recursion at safe vertices.

With phantom pairs kept as variables each phantom pair contributes a factor
``1 - t``, and cone pairs drop out.  All four sums are squarefree in the
t-variables, so they are accumulated as ``{bitmask: coefficient}`` dicts and
converted to :class:`LaurentPolynomial` at the end.
"""

from __future__ import annotations

from typing import Hashable, NamedTuple

from .complexes import DEFAULT_MAX_FACES, TableauComplex, Vertex, VertexKind
from .decompose import choose_pivot, h_vector, shelling_order
from .errors import CapExceeded, InvariantViolation, ValidationError
from .laurent import LaurentPolynomial, Var

__all__ = [
    "t_var",
    "kpoly_faces",
    "kpoly_interior",
    "kpoly_shelling",
    "kpoly_recursive",
    "kpoly",
    "KPOLY_METHODS",
    "CoarseCheck",
    "hilbert_coarse_check",
    "divide_phantom",
]

Multilinear = dict  # dict[int, int]: bitmask of t-variables -> coefficient


def t_var(point: Hashable, value: Hashable) -> Var:
    return Var("t", (point, value))


class _Encoding:
    """Bit positions for the pairs of the ambient relation."""

    def __init__(self, cx: TableauComplex):
        self.pairs = cx.pairs
        self.bit = {v: 1 << k for k, v in enumerate(self.pairs)}
        self.vars = [t_var(v.point, v.value) for v in self.pairs]

    def mask(self, point, values) -> int:
        m = 0
        for y in values:
            m |= self.bit[Vertex(point, y)]
        return m

    def to_poly(self, ml: Multilinear) -> LaurentPolynomial:
        terms = {}
        for mask, c in ml.items():
            if not c:
                continue
            mono = []
            k = 0
            while mask:
                if mask & 1:
                    mono.append((self.vars[k], 1))
                mask >>= 1
                k += 1
            terms[tuple(mono)] = c
        return LaurentPolynomial(terms)


def _expand(tmask: int, one_minus: list[int], coeff: int = 1) -> Multilinear:
    """``coeff * t^tmask * prod(1 - t_b)`` over the bits ``b`` (all disjoint)."""
    out = {tmask: coeff}
    for b in one_minus:
        out.update({m | b: -c for m, c in list(out.items())})
    return out


def _accumulate(total: Multilinear, part: Multilinear, scale: int = 1) -> None:
    for m, c in part.items():
        total[m] = total.get(m, 0) + scale * c


def _product(a: Multilinear, b: Multilinear) -> Multilinear:
    """Product of multilinear polynomials in disjoint variable sets."""
    out: Multilinear = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1 | m2
            out[m] = out.get(m, 0) + c1 * c2
    return out


def kpoly_faces(cx: TableauComplex, max_faces: int = DEFAULT_MAX_FACES) -> LaurentPolynomial:
    """Sum over faces ``F`` of ``prod_x prod_{E(x)-F(x)} t * prod_{F(x)} (1 - t)``.

    Evaluated along the face-enumeration recursion, memoised on the set of
    facets still compatible with the choices made so far.
    """
    count = cx.count_faces()
    if count > max_faces:
        raise CapExceeded(f"complex has {count} faces, more than the cap {max_faces}")
    enc = _Encoding(cx)
    n = len(cx.points)
    local = []
    for i, x in enumerate(cx.points):
        e = cx.ambient[i]
        local.append([
            (S, _expand(enc.mask(x, e - S), [enc.bit[Vertex(x, y)] for y in cx.sorted_values(S)]))
            for S in cx._subsets[i]
        ])
    memo: dict = {}

    def rec(i: int, alive: frozenset) -> Multilinear:
        if i == n:
            return {0: 1}
        key = (i, alive)
        if key in memo:
            return memo[key]
        by_value: dict = {}
        for k in alive:
            by_value.setdefault(cx.facets[k][i], set()).add(k)
        total: Multilinear = {}
        for S, g in local[i]:
            nxt = frozenset().union(*(by_value[y] for y in S if y in by_value))
            if nxt:
                _accumulate(total, _product(g, rec(i + 1, nxt)))
        memo[key] = total
        return total

    return enc.to_poly(rec(0, frozenset(range(len(cx.facets)))))


def _require_ball_or_sphere(cx: TableauComplex, assume_shellable: bool) -> None:
    if cx.problem is None and not assume_shellable:
        raise ValidationError(
            "the interior-face formula needs a ball or sphere: use a poset complex or assume_shellable=True"
        )


def kpoly_interior(
    cx: TableauComplex, assume_shellable: bool = False, max_faces: int = DEFAULT_MAX_FACES
) -> LaurentPolynomial:
    """Alternating sum over interior faces of ``prod_x prod_{F(x)} (1 - t)``."""
    _require_ball_or_sphere(cx, assume_shellable)
    enc = _Encoding(cx)
    total: Multilinear = {}
    n = len(cx.points)
    for F in cx.faces(max_faces):
        if not cx.is_interior(F, method="bruteforce"):
            continue
        size = sum(len(s) for s in F)
        bits = [enc.bit[Vertex(x, y)] for x, s in zip(cx.points, F) for y in s]
        _accumulate(total, _expand(0, bits, -1 if (size - n) % 2 else 1))
    return enc.to_poly(total)


def kpoly_shelling(cx: TableauComplex) -> LaurentPolynomial:
    """Sum over facets ``f`` of ``prod_x (1 - t[x!f(x)]) prod_{U_f(x) - f(x)} t``."""
    if cx.problem is None:
        raise ValidationError("the shelling formula needs a complex built from a poset problem")
    if cx.cone_vertices:
        raise ValidationError("the shelling formula requires the ambient relation to be the union of the facets")
    enc = _Encoding(cx)
    cert = shelling_order(cx)
    total: Multilinear = {}
    for f, N in zip(cert.facets, cert.new_faces):
        # vertices of N are exactly the pairs y in U_f(x) other than f(x)
        tmask = 0
        for x, e, s in zip(cx.points, cx.ambient, N):
            tmask |= enc.mask(x, e - s)
        bits = [enc.bit[Vertex(x, y)] for x, y in zip(cx.points, f)]
        _accumulate(total, _expand(tmask, bits))
    return enc.to_poly(total)


def _auto_pivot(node: TableauComplex) -> Vertex:
    if node.problem is not None:
        return choose_pivot(node)
    for v in node.normal_vertices:
        if node.is_safe(v):
            return v
    raise ValidationError("no safe vertex to recurse on")


def kpoly_recursive(cx: TableauComplex, pivot: Vertex | tuple | None = None) -> LaurentPolynomial:
    """Recursion ``K = K(deletion) + t_v * K(star)`` at safe vertices ``v``.

    All subcomplexes share the ambient relation, so the deletion carries the
    phantom factor ``1 - t_v`` and the star has ``v`` as a cone vertex; in
    terms of the complexes on the remaining pairs this is
    ``(1 - t_v) K'(deletion) + t_v K'(star)``.
    """
    enc = _Encoding(cx)

    def rec(node: TableauComplex, v: Vertex | None) -> Multilinear:
        if len(node.facets) == 1:
            f = node.facets[0]
            return _expand(0, [enc.bit[Vertex(x, y)] for x, y in zip(node.points, f)])
        if v is None:
            v = _auto_pivot(node)
        else:
            v = Vertex(*v)
            kind = node.kind(v)
            if kind is not VertexKind.NORMAL:
                raise ValidationError(f"pivot {v!r} is a {kind.value} vertex")
            if not node.is_safe(v):
                raise ValidationError(f"pivot {v!r} is not safe")
        out = dict(rec(node.deletion(v), None))
        tv = enc.bit[v]
        for m, c in rec(node.star(v), None).items():
            if m & tv:
                raise InvariantViolation("star K-polynomial involves its cone variable")
            out[m | tv] = out.get(m | tv, 0) + c
        return out

    return enc.to_poly(rec(cx, pivot))


KPOLY_METHODS = ("faces", "interior", "shelling", "recursive")


def kpoly(cx: TableauComplex, method: str = "faces", **kwargs) -> LaurentPolynomial:
    if method == "faces":
        return kpoly_faces(cx, **kwargs)
    if method == "interior":
        return kpoly_interior(cx, **kwargs)
    if method == "shelling":
        return kpoly_shelling(cx)
    if method == "recursive":
        return kpoly_recursive(cx)
    raise ValidationError(f"unknown K-polynomial method {method!r}")


class CoarseCheck(NamedTuple):
    h_vector: list[int]
    exact: bool
    matches: bool | None


def hilbert_coarse_check(cx: TableauComplex, K: LaurentPolynomial | None = None) -> CoarseCheck:
    """Coarsen ``K`` to one variable and divide by ``(1 - t)^|X|``.

    The ring has one variable per pair of ``E`` and facets have
    ``|E| - |X|`` vertices, so the exponent is ``|E| - (|E| - |X|) = |X|``.
    ``matches`` compares with :func:`h_vector` when the complex has poset
    provenance, and is ``None`` otherwise.
    """
    if K is None:
        K = kpoly_faces(cx)
    t = Var("t", None)
    coeffs = K.coarsen("t", t).univariate_coefficients(t)
    exact = True
    for _ in range(len(cx.points)):
        if sum(coeffs) != 0:
            exact = False
            break
        quotient, acc = [], 0
        for c in coeffs[:-1]:
            acc += c
            quotient.append(acc)
        coeffs = quotient
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    matches = None
    if cx.problem is not None:
        matches = exact and coeffs == h_vector(cx)
    return CoarseCheck(coeffs, exact, matches)


def divide_phantom(cx: TableauComplex, K: LaurentPolynomial) -> LaurentPolynomial:
    """Remove the uniform ``1 - t`` factors of the phantom pairs."""
    phantom = [t_var(v.point, v.value) for v in cx.phantom_pairs]
    reduced = K.substitute({v: 0 for v in phantom})
    check = reduced
    for v in phantom:
        check = check * (1 - LaurentPolynomial.gen(v.namespace, v.key))
    if check != K:
        raise InvariantViolation("K-polynomial is not divisible by the phantom factors")
    return reduced
