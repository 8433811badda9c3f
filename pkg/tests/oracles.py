"""Independent reference computations used only by the tests.

Nothing here calls the package's enumeration or polynomial formulas; the
only shared piece is the polynomial container for comparing results.
"""

from __future__ import annotations

import itertools

import numpy as np

from tabcomplex.laurent import LaurentPolynomial, Var


def product_tableaux(chains, le, covers, strict):
    """Tableaux by filtering the full product of value chains."""
    points = list(chains)
    out = []
    for values in itertools.product(*(chains[x] for x in points)):
        f = dict(zip(points, values))
        if all(le(f[a], f[b]) for a, b in covers) and all(f[a] != f[b] and le(f[a], f[b]) for a, b in strict):
            out.append(values)
    return out


def product_faces(points, facets, ambient):
    """Set-valued tableaux inside ``ambient`` containing some facet."""
    subsets = []
    for e in ambient:
        e = sorted(e, key=repr)
        subsets.append([frozenset(c) for r in range(1, len(e) + 1) for c in itertools.combinations(e, r)])
    facets = set(map(tuple, facets))
    faces = []
    for F in itertools.product(*subsets):
        if any(all(v in s for v, s in zip(f, F)) for f in facets):
            faces.append(F)
    return faces


def f_vector_from_vertex_sets(vertex_sets):
    """f-vector of the complex generated by the given facets (vertex sets)."""
    faces = set()
    for f in vertex_sets:
        f = sorted(f, key=repr)
        for r in range(len(f) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(f, r))
    dim = max(len(f) for f in vertex_sets)
    counts = [0] * (dim + 1)
    for s in faces:
        counts[len(s)] += 1
    return counts


def stanley_reisner_kpoly(variables, vertex_facets):
    """``sum_G prod_{v in G} t_v prod_{v not in G} (1 - t_v)`` over faces ``G``.

    ``variables`` lists every ring variable (vertices plus any variable lying
    in no face).  The coefficient of ``t^S`` is the Moebius inversion of the
    face indicator over subsets of ``S``, computed with numpy on the full
    Boolean lattice.
    """
    n = len(variables)
    index = {v: i for i, v in enumerate(variables)}
    indicator = np.zeros(1 << n, dtype=np.int64)
    for f in vertex_facets:
        bits = [index[v] for v in f]
        for r in range(len(bits) + 1):
            for c in itertools.combinations(bits, r):
                indicator[sum(1 << b for b in c)] = 1
    a = indicator
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    terms = {}
    for mask in np.nonzero(a)[0]:
        mask = int(mask)
        mono = tuple((Var("t", variables[i]), 1) for i in range(n) if mask >> i & 1)
        terms[mono] = int(a[mask])
    return LaurentPolynomial(terms)


# -- divided differences ----------------------------------------------------


def _divided_difference(p: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """``(p - s_i p) / (x_i - x_{i+1})`` on Laurent monomials."""
    xi, xj = Var("x", i), Var("x", i + 1)
    out = {}
    for mono, c in p.terms():
        exps = dict(mono)
        a, b = exps.pop(xi, 0), exps.pop(xj, 0)
        d, low = a - b, min(a, b)
        if d == 0:
            continue
        sign = 1 if d > 0 else -1
        for k in range(abs(d)):
            e = dict(exps)
            hi_i = (abs(d) - 1 - k) if d > 0 else k
            hi_j = k if d > 0 else (abs(d) - 1 - k)
            e[xi] = low + hi_i
            e[xj] = low + hi_j
            key = tuple(sorted((v, x) for v, x in e.items() if x))
            out[key] = out.get(key, 0) + sign * c
    return LaurentPolynomial(out)


def _reduced_path(w):
    """Positions ``i`` (1-based) with ``w = w0 s_{i_1} s_{i_2} ...`` descending in length."""
    u = list(w)
    path = []
    while True:
        for i in range(len(u) - 1):
            if u[i] < u[i + 1]:
                u[i], u[i + 1] = u[i + 1], u[i]
                path.append(i + 1)
                break
        else:
            return list(reversed(path))


def schubert_polynomial(w):
    """Single Schubert polynomial in ``a`` by divided differences from the longest element."""
    n = len(w)
    p = LaurentPolynomial.constant(1)
    for i in range(1, n + 1):
        p = p * LaurentPolynomial.gen("x", i, n - i)
    for i in _reduced_path(w):
        p = _divided_difference(p, i)
    return p.map_monomials(lambda v, e: LaurentPolynomial.gen("a", v.key, e))


def double_grothendieck(w):
    """Double Grothendieck polynomial by isobaric divided differences.

    Starts from ``prod_{i+j<=n} (1 - x_i / y_j)`` and applies
    ``f -> -d_i(x_{i+1} f)`` down a reduced path.
    """
    n = len(w)
    g = LaurentPolynomial.constant(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            g = g * (1 - LaurentPolynomial.monomial({Var("x", i): 1, Var("y", j): -1}))
    for i in _reduced_path(w):
        g = -_divided_difference(LaurentPolynomial.gen("x", i + 1) * g, i)
    return g


def brute_force_svt(shape, flags):
    """Semistandard set-valued tableaux by filtering all box-wise subset choices."""
    boxes = [(r, c) for r, length in enumerate(shape, 1) for c in range(1, length + 1)]
    choices = []
    for r, c in boxes:
        vals = range(1, flags[r - 1] + 1)
        choices.append([frozenset(s) for k in range(1, len(vals) + 1) for s in itertools.combinations(vals, k)])
    at = {}
    out = []
    for pick in itertools.product(*choices):
        at = dict(zip(boxes, pick))
        ok = True
        for (r, c), s in at.items():
            if (r, c + 1) in at and max(s) > min(at[(r, c + 1)]):
                ok = False
                break
            if (r + 1, c) in at and max(s) >= min(at[(r + 1, c)]):
                ok = False
                break
        if ok:
            out.append(pick)
    return boxes, out


def brute_force_ssyt(shape, flags):
    boxes, svts = brute_force_svt(shape, flags)
    return boxes, [tuple(min(s) for s in t) for t in svts if all(len(s) == 1 for s in t)]
