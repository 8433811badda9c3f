from hypothesis import given, settings, strategies as st

from tabcomplex import LaurentPolynomial as L, Var

t1, t2 = L.gen("t", 1), L.gen("t", 2)


def test_expansion():
    assert (1 - t1) * (1 - t2) + t1 * (1 - t2) + t2 * (1 - t1) == 1 - t1 * t2


def test_substitute():
    xy = L.monomial({Var("x", 1): 1, Var("y", 1): -1})
    assert (1 - t1).substitute({Var("t", 1): xy}) == 1 - xy


def test_coarsen():
    t = L.gen("t")
    assert (1 - t1 * t2).coarsen() == 1 - t**2


def test_negative_exponents_cancel():
    y = L.gen("y", 3)
    assert y * y.inverse_monomial() == 1
    assert str(1 - L.gen("x", 1) * L.gen("y", 1, -1)) == "1 - x[1]*y[1]^-1"


def test_canonical_serialization():
    p = 3 * L.gen("y", 2, -1) - L.gen("x", 1) + L.gen("t", (1, 1, 2))
    q = L.gen("t", (1, 1, 2)) + 3 * L.gen("y", 2, -1) - L.gen("x", 1)
    assert p.to_json() == q.to_json()


variables = st.sampled_from([Var("t", 1), Var("t", 2), Var("x", 1), Var("y", 1)])
monomials = st.dictionaries(variables, st.integers(-2, 2), max_size=3)
polys = st.lists(st.tuples(monomials, st.integers(-5, 5)), max_size=4).map(
    lambda terms: L.sum(L.monomial(m, c) for m, c in terms)
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert -(-a) == a
