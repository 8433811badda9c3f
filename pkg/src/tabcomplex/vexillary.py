"""Vexillary permutations and their double Grothendieck polynomials.

Grothendieck polynomials live in the namespaces ``x`` and ``y``; the
specializations use ``x`` (Buch), and ``a``/``b`` (flagged Schur).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

from .complexes import TableauComplex
from .decompose import new_face
from .errors import CapExceeded, MethodDisagreement, ValidationError
from .kpoly import kpoly_faces, t_var
from .laurent import LaurentPolynomial, Var
from .poset import DEFAULT_MAX_TABLEAUX
from .young import Partition, as_shape, normalize_flags, young_complex

__all__ = [
    "check_permutation",
    "diagram",
    "is_vexillary",
    "is_grassmannian",
    "shape_and_flagging_of",
    "GROTHENDIECK_METHODS",
    "grothendieck",
    "young_substitution",
    "specialize_buch",
    "specialize_schubert",
    "schubert_lowest_terms",
    "jacobi_trudi_schur",
]

GROTHENDIECK_METHODS = ("lsvt", "svt", "ssyt")


def check_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(int(v) for v in pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValidationError(f"{list(pi)} is not a permutation of 1..{len(pi)}")
    return pi


def diagram(pi: Sequence[int]) -> list[tuple[int, int]]:
    """Boxes ``(p, q)`` with ``pi(p) > q`` and ``pi^-1(q) > p``, sorted."""
    pi = check_permutation(pi)
    inv = {v: p for p, v in enumerate(pi, 1)}
    n = len(pi)
    return [(p, q) for p in range(1, n + 1) for q in range(1, n + 1) if pi[p - 1] > q and inv[q] > p]


def is_vexillary(pi: Sequence[int]) -> bool:
    """2143-avoidance, by scanning all index quadruples."""
    pi = check_permutation(pi)
    for a, b, c, d in itertools.combinations(range(len(pi)), 4):
        if pi[b] < pi[a] < pi[d] < pi[c]:
            return False
    return True


def is_grassmannian(pi: Sequence[int]) -> bool:
    pi = check_permutation(pi)
    return sum(1 for u, v in zip(pi, pi[1:]) if u > v) <= 1


def shape_and_flagging_of(pi: Sequence[int]) -> tuple[Partition, tuple[int, ...]]:
    """Partition and flagging of a vexillary permutation.

    Diagonal ``k`` (boxes with ``column - row = k``) of the partition gets as
    many boxes as diagonal ``k`` of the diagram; matching the ``j``-th boxes
    down each diagonal, the flag of row ``i`` is the diagram row of the box
    matched with the last box of row ``i``.
    """
    pi = check_permutation(pi)
    if not is_vexillary(pi):
        raise ValidationError(f"{list(pi)} is not vexillary (contains the pattern 2143)")
    by_diagonal: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for p, q in diagram(pi):
        by_diagonal[q - p].append((p, q))
    image = {}
    for k, cells in by_diagonal.items():
        for j, cell in enumerate(sorted(cells), 1):
            box = (j, j + k) if k >= 0 else (j - k, j)
            image[box] = cell
    rows: dict[int, list[int]] = defaultdict(list)
    for r, c in image:
        rows[r].append(c)
    nrows = max(rows, default=0)
    parts = []
    for r in range(1, nrows + 1):
        cols = sorted(rows.get(r, ()))
        if cols != list(range(1, len(cols) + 1)) or not cols:
            raise ValidationError(f"diagonal counts of the diagram of {list(pi)} do not form a partition")
        parts.append(len(cols))
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValidationError(f"diagonal counts of the diagram of {list(pi)} do not form a partition")
    flags = tuple(image[(r, parts[r - 1])][0] for r in range(1, nrows + 1))
    return Partition(tuple(parts)), flags


def _resolve(data) -> tuple[Partition, tuple[int, ...]]:
    """Accept a permutation or a ``(shape, flags)`` pair."""
    if isinstance(data, (list, tuple)) and data and all(isinstance(v, int) for v in data):
        return shape_and_flagging_of(data)
    if isinstance(data, (list, tuple)) and len(data) == 2:
        shape = as_shape(data[0])
        if not isinstance(shape, Partition):
            raise ValidationError("Grothendieck polynomials need a straight shape")
        return shape, normalize_flags(shape, data[1])
    if isinstance(data, (list, tuple)) and not data:
        return Partition(()), ()
    raise ValidationError(f"expected a permutation or a (shape, flags) pair, got {data!r}")


def _xy(i: int, b: tuple[int, int]) -> LaurentPolynomial:
    """``x_i * y_{i + c - r}^{-1}`` for entry ``i`` in box ``b = (r, c)``."""
    r, c = b
    return LaurentPolynomial.monomial({Var("x", i): 1, Var("y", i + c - r): -1})


def young_substitution(cx: TableauComplex) -> dict[Var, LaurentPolynomial]:
    """``t[(b)!i] -> x_i y_{i+j(b)}^{-1}`` for every pair of the ambient relation."""
    return {t_var(v.point, v.value): _xy(v.value, v.point) for v in cx.pairs}


def _groth_lsvt(cx: TableauComplex, max_faces: int) -> LaurentPolynomial:
    return kpoly_faces(cx, max_faces=max_faces).substitute(young_substitution(cx))


def _svt_transitions(shape: Partition, flags):
    """Row-major filling steps: for each box, the admissible cells given a column state.

    The state records, per column, the maximum of the lowest filled box
    (0 before any box); a cell is a sorted tuple of entries.
    """
    for r, c in shape.boxes():
        top = flags[r - 1]

        def cells(state, r=r, c=c, top=top):
            lo = max(1, state[c - 2] if c > 1 else 1, state[c - 1] + 1 if r > 1 else 1)
            for m in range(lo, top + 1):
                rest = range(m + 1, top + 1)
                for k in range(len(rest) + 1):
                    for extra in itertools.combinations(rest, k):
                        cell = (m,) + extra
                        yield cell, state[: c - 1] + (cell[-1],) + state[c:]

        yield (r, c), cells


def _groth_svt(shape: Partition, flags, max_tableaux: int) -> LaurentPolynomial:
    """Signed sum over semistandard set-valued tableaux.

    Partial fillings that leave the same maximum in every column are
    merged, since that is all the remaining boxes can see.  A counting pass
    runs first so that ``max_tableaux`` is enforced before any expansion.
    """
    flags = normalize_flags(shape, flags)
    start = (0,) * shape.parts[0]
    counts = {start: 1}
    for _, cells in _svt_transitions(shape, flags):
        nxt: dict[tuple, int] = defaultdict(int)
        for state, n in counts.items():
            for _, key in cells(state):
                nxt[key] += n
        counts = nxt
    if sum(counts.values()) > max_tableaux:
        raise CapExceeded(f"more than {max_tableaux} set-valued tableaux")

    states = {start: LaurentPolynomial.constant(1)}
    for box, cells in _svt_transitions(shape, flags):
        factors: dict[tuple, LaurentPolynomial] = {}
        parts: dict[tuple, list] = defaultdict(list)
        for state, poly in states.items():
            for cell, key in cells(state):
                if cell not in factors:
                    f = LaurentPolynomial.constant(-1 if len(cell) % 2 == 0 else 1)
                    for i in cell:
                        f = f * (1 - _xy(i, box))
                    factors[cell] = f
                parts[key].append(poly * factors[cell])
        states = {k: LaurentPolynomial.sum(ps) for k, ps in parts.items()}
    return LaurentPolynomial.sum(states.values())


def _groth_ssyt(cx: TableauComplex) -> LaurentPolynomial:
    parts = []
    for f in cx.facets:
        N = new_face(cx, f).face
        term = LaurentPolynomial.constant(1)
        for b, i, e, n in zip(cx.points, f, cx.ambient, N):
            term = term * (1 - _xy(i, b))
            for h in sorted(e - n):
                term = term * _xy(h, b)
        parts.append(term)
    return LaurentPolynomial.sum(parts)


def grothendieck(
    data,
    method: str = "svt",
    *,
    max_faces: int = 10**7,
    max_tableaux: int = DEFAULT_MAX_TABLEAUX,
) -> LaurentPolynomial:
    """Double Grothendieck polynomial of a vexillary permutation.

    ``data`` is a permutation in one-line notation or a ``(shape, flags)``
    pair.  ``method`` is one of ``lsvt`` (sum over faces of the flagged
    Young complex), ``svt`` (sum over semistandard set-valued tableaux),
    ``ssyt`` (sum over semistandard tableaux with their minimal new faces)
    or ``all``, which computes the three and raises
    :class:`MethodDisagreement` unless they coincide.
    """
    shape, flags = _resolve(data)
    if method not in GROTHENDIECK_METHODS + ("all",):
        raise ValidationError(f"unknown Grothendieck method {method!r}")
    if shape.size == 0:
        return LaurentPolynomial.constant(1)
    if method == "svt":
        return _groth_svt(shape, flags, max_tableaux)
    cx = young_complex(shape, flags, max_tableaux)
    if method == "lsvt":
        return _groth_lsvt(cx, max_faces)
    if method == "ssyt":
        return _groth_ssyt(cx)
    results = {
        "lsvt": _groth_lsvt(cx, max_faces),
        "svt": _groth_svt(shape, flags, max_tableaux),
        "ssyt": _groth_ssyt(cx),
    }
    if len(set(results.values())) != 1:
        raise MethodDisagreement(f"Grothendieck methods disagree for shape {shape}, flags {flags}")
    return results["svt"]


def specialize_buch(G: LaurentPolynomial) -> LaurentPolynomial:
    """Set every ``y_j = 1``, then replace ``x_i`` by ``1 - x_i``."""

    def fn(v: Var, e: int):
        if v.namespace == "y":
            return LaurentPolynomial.constant(1)
        if v.namespace == "x":
            if e < 0:
                raise ValidationError("cannot substitute 1 - x into a negative power of x")
            return (1 - LaurentPolynomial.gen("x", v.key)) ** e
        return None

    return G.map_monomials(fn)


def schubert_lowest_terms(G: LaurentPolynomial, degree: int) -> LaurentPolynomial:
    """Lowest-degree part of ``G`` after ``x_i -> 1 - a_i``, ``y_j^{-1} -> 1/(1 - b_j)``.

    The geometric series is cut at ``degree``; the result is exact as long
    as the lowest degree does not exceed ``degree``.
    """

    def fn(v: Var, e: int):
        if v.namespace == "x":
            if e < 0:
                raise ValidationError("cannot substitute 1 - a into a negative power of x")
            return ((1 - LaurentPolynomial.gen("a", v.key)) ** e).truncate(degree)
        if v.namespace == "y":
            b = LaurentPolynomial.gen("b", v.key)
            if e > 0:
                return ((1 - b) ** e).truncate(degree)
            series = LaurentPolynomial.sum(b**k for k in range(degree + 1))
            out = LaurentPolynomial.constant(1)
            for _ in range(-e):
                out = (out * series).truncate(degree)
            return out
        return None

    parts = []
    for mono, coeff in G.terms():
        term = LaurentPolynomial.constant(coeff)
        for v, e in mono:
            rep = fn(v, e)
            term = (term * (rep if rep is not None else LaurentPolynomial.gen(v.namespace, v.key, e))).truncate(
                degree
            )
        parts.append(term)
    low = LaurentPolynomial.sum(parts).lowest_degree_component()
    return low


def specialize_schubert(
    shape: Partition | Sequence[int], flags: int | Sequence[int], variant: str = "double"
) -> LaurentPolynomial:
    """Flagged (double) Schur polynomial as a sum over semistandard tableaux.

    ``double``: each box ``b`` with entry ``i`` contributes ``a_i - b_{i+j(b)}``
    where ``j(b) = column - row``; ``single`` drops the ``b`` variables.
    """
    if variant not in ("double", "single"):
        raise ValidationError(f"unknown Schubert variant {variant!r}")
    shape = as_shape(shape)
    if shape.size == 0:
        return LaurentPolynomial.constant(1)
    cx = young_complex(shape, flags)
    parts = []
    for f in cx.facets:
        term = LaurentPolynomial.constant(1)
        for (r, c), i in zip(cx.points, f):
            factor = LaurentPolynomial.gen("a", i)
            if variant == "double":
                factor = factor - LaurentPolynomial.gen("b", i + c - r)
            term = term * factor
        parts.append(term)
    return LaurentPolynomial.sum(parts)


def _complete_homogeneous(m: int, k: int) -> LaurentPolynomial:
    if m < 0:
        return LaurentPolynomial.constant(0)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(1, k + 1), m):
        counts: dict[int, int] = defaultdict(int)
        for i in combo:
            counts[i] += 1
        mono = tuple((Var("a", i), e) for i, e in sorted(counts.items()))
        terms[mono] = terms.get(mono, 0) + 1
    return LaurentPolynomial(terms)


def jacobi_trudi_schur(shape: Partition | Sequence[int], k: int) -> LaurentPolynomial:
    """``det(h_{lambda_i - i + j})`` in ``a_1..a_k``, expanded by permutations."""
    if k < 1:
        raise ValidationError("need at least one variable")
    parts = as_shape(shape).parts
    ell = len(parts)
    h = {}
    total = []
    for perm in itertools.permutations(range(ell)):
        inversions = sum(1 for i, j in itertools.combinations(range(ell), 2) if perm[i] > perm[j])
        term = LaurentPolynomial.constant(-1 if inversions % 2 else 1)
        for i in range(ell):
            m = parts[i] - i + perm[i]
            if m not in h:
                h[m] = _complete_homogeneous(m, k)
            term = term * h[m]
            if not term:
                break
        total.append(term)
    return LaurentPolynomial.sum(total)
