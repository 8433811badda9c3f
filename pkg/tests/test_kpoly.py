import pytest
from hypothesis import given, settings, strategies as st

from tabcomplex import (
    LaurentPolynomial as L,
    ValidationError,
    Var,
    build_complex,
    divide_phantom,
    hilbert_coarse_check,
    kpoly,
    kpoly_faces,
    kpoly_interior,
    kpoly_recursive,
    kpoly_shelling,
    t_var,
    young_complex,
)
from oracles import stanley_reisner_kpoly
from suite import suite, word_complex

B = (1, 1)


def sr_oracle(cx):
    variables = [(v.point, v.value) for v in cx.pairs]
    vsets = [{(v.point, v.value) for v in cx.facet_vertex_set(f)} for f in cx.facets]
    return stanley_reisner_kpoly(variables, vsets)


def test_point_pair_all_methods():
    cx = young_complex((1,), 2)
    t1, t2 = L.gen("t", (B, 1)), L.gen("t", (B, 2))
    expected = 1 - t1 * t2
    for method in ("faces", "interior", "shelling", "recursive"):
        assert kpoly(cx, method) == expected
    assert kpoly_recursive(cx, pivot=(B, 2)) == expected
    assert kpoly_recursive(cx, pivot=(B, 1)) == expected


def test_single_facet_is_product_of_phantoms():
    cx = young_complex((1,), 1)
    assert kpoly_faces(cx) == 1 - L.gen("t", (B, 1))
    assert kpoly_recursive(cx) == 1 - L.gen("t", (B, 1))
    check = hilbert_coarse_check(cx)
    assert check.h_vector == [1] and check.exact and check.matches


def test_flagged_coarse_polynomial():
    cx = young_complex((2, 1), (2, 3))
    t = L.gen("t")
    K = kpoly_faces(cx)
    assert K.coarsen() == (1 - t) ** 3 * (1 + 3 * t + t**2)
    check = hilbert_coarse_check(cx, K)
    assert check.h_vector == [1, 3, 1] and check.exact and check.matches


def test_point_pair_coarse():
    check = hilbert_coarse_check(young_complex((1,), 2))
    assert check.h_vector == [1, 1] and check.matches


def test_unsafe_pivot_rejected():
    cx = young_complex((2, 1), 3)
    # relabelling box (1,1) to 2 breaks 12/2
    with pytest.raises(ValidationError):
        kpoly_recursive(cx, pivot=((1, 1), 2))


def test_interior_needs_ball_certificate():
    words = word_complex()
    with pytest.raises(ValidationError):
        kpoly_interior(words)
    assert kpoly_interior(words, assume_shellable=True) == kpoly_faces(words)


def test_shelling_refuses_cone_pairs():
    base = young_complex((1,), 2)
    wide = build_complex(base.facets, [{1, 2, 3}], points=base.points, problem=base.problem)
    with pytest.raises(ValidationError):
        kpoly_shelling(wide)
    # a cone pair leaves K unchanged: the ring variable and the cone cancel
    assert kpoly_faces(wide) == kpoly_faces(base) == sr_oracle(wide)


def test_word_complex_against_oracle():
    words = word_complex()
    K = kpoly_faces(words)
    assert K == sr_oracle(words)
    assert kpoly_recursive(words) == K
    reduced = divide_phantom(words, K)
    assert t_var(2, "e") not in reduced.variables()
    assert reduced * (1 - L.gen("t", (2, "e"))) == K


def test_unknown_method():
    with pytest.raises(ValidationError):
        kpoly(young_complex((1,), 2), "magic")


SUITE = suite()
SMALL = [(n, cx) for n, cx in SUITE if cx.count_faces() <= 10**4]


@pytest.mark.parametrize("name, cx", SUITE, ids=[n for n, _ in SUITE])
def test_methods_agree_with_oracle(name, cx):
    K = kpoly_faces(cx)
    assert K == sr_oracle(cx)
    assert kpoly_interior(cx) == K
    assert kpoly_shelling(cx) == K
    assert kpoly_recursive(cx) == K
    check = hilbert_coarse_check(cx, K)
    assert check.exact and check.matches
    # |E| ring variables against facets of |E| - |X| vertices: always a drop
    assert K.evaluate(lambda v: 1) == 0
    assert sum(check.h_vector) == len(cx.facets)
    assert kpoly_faces(cx) == K


@st.composite
def facet_lists(draw):
    k = draw(st.integers(1, 3))
    alphabet = [sorted(draw(st.sets(st.sampled_from("abc"), min_size=1))) for _ in range(k)]
    rows = draw(st.lists(st.tuples(*(st.sampled_from(a) for a in alphabet)), min_size=1, max_size=6))
    extra = [set(a) | set(draw(st.sets(st.sampled_from("de"), max_size=1))) for a in alphabet]
    return k, rows, extra


@settings(max_examples=60, deadline=None)
@given(facet_lists())
def test_faces_formula_matches_oracle_on_random_complexes(data):
    k, rows, ambient = data
    cx = build_complex(rows, ambient, points=tuple(range(k)))
    assert kpoly_faces(cx) == sr_oracle(cx)
