import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tabcomplex import (
    Partition,
    SkewShape,
    ValidationError,
    YoungSVT,
    empty_face_tableau,
    enumerate_svt,
    is_buch_semistandard,
    is_limit_semistandard,
    render_tableau,
    shape_and_flagging_of,
    shape_to_problem,
    young_complex,
)
from tabcomplex.young import face_as_svt
from oracles import brute_force_ssyt, brute_force_svt
from suite import young_cases


def ssyt_ok(shape, t):
    at = dict(zip(shape.boxes(), t))
    return all(
        ((r, c + 1) not in at or v <= at[(r, c + 1)]) and ((r + 1, c) not in at or v < at[(r + 1, c)])
        for (r, c), v in at.items()
    )


def test_partition_basics():
    lam = Partition((3, 2, 2))
    assert lam.size == 7 and lam.rows == 3
    assert lam.boxes()[:4] == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert lam.contains(Partition((2, 2)))
    with pytest.raises(ValidationError):
        Partition((1, 2))
    with pytest.raises(ValidationError):
        SkewShape(Partition((2, 1)), Partition((1, 1, 1)))


def test_facet_counts():
    assert len(young_complex((2, 1), 3).facets) == 8
    assert len(young_complex((2, 1), (2, 3)).facets) == 5
    skew = SkewShape(Partition((2, 1)), Partition((1,)))
    cx = young_complex(skew, 2)
    assert cx.points == ((1, 2), (2, 1)) and len(cx.facets) == 4


@pytest.mark.parametrize("bound", [0, (3,), (3, 3, 3), (3, 0)])
def test_bad_flags(bound):
    with pytest.raises(ValidationError):
        shape_to_problem((2, 1), bound)


def test_predicates_examples():
    single = YoungSVT.from_rows([[1, 2], [3]])
    assert is_buch_semistandard(single) and is_limit_semistandard(single)
    tau = YoungSVT.from_rows([[{1, 2}, 2], [3]])
    assert is_buch_semistandard(tau)
    limit = YoungSVT.from_rows([[{1, 2}, 1], [{1, 3}]])
    assert not is_buch_semistandard(limit) and is_limit_semistandard(limit)
    neither = YoungSVT.from_rows([[2, 1], [3]])
    assert not is_buch_semistandard(neither) and not is_limit_semistandard(neither)
    assert not is_limit_semistandard(YoungSVT.from_rows([[{2, 3}, 1], [{1, 2}]]))


def test_flags_in_predicates():
    tau = YoungSVT.from_rows([[1, 2], [3]])
    assert is_buch_semistandard(tau, (2, 3)) and not is_buch_semistandard(tau, (2, 2))
    assert not is_limit_semistandard(YoungSVT.from_rows([[1, {2, 3}], [{3}]]), (1, 3))


def test_svt_validation():
    with pytest.raises(ValidationError):
        YoungSVT(Partition((2,)), (frozenset({1}),))
    with pytest.raises(ValidationError):
        YoungSVT(Partition((1,)), (frozenset(),))
    assert YoungSVT.from_rows([[{1, 2}, 2], [3]]).size == 4


@pytest.mark.parametrize(
    "shape, bound, expected",
    [
        ((2, 1), 3, [{1, 2}, {1, 2, 3}, {2, 3}]),
        ((2, 1), (2, 3), [{1, 2}, {1, 2}, {2, 3}]),
        ((1,), (1,), [{1}]),
    ],
)
def test_empty_face_tableau(shape, bound, expected):
    assert [set(s) for s in empty_face_tableau(shape, bound).entries] == expected


def test_empty_face_needs_tableaux():
    with pytest.raises(ValidationError):
        empty_face_tableau((1, 1), (1, 1))


@pytest.mark.parametrize("pi", [[8, 7, 1, 6, 2, 9, 5, 3, 4], [2, 7, 4, 5, 8, 1, 3, 6], [1, 3, 5, 2, 4], [1, 4, 3, 2]])
def test_empty_face_intervals_for_vexillary_flags(pi):
    shape, flags = shape_and_flagging_of(pi)
    tau = empty_face_tableau(shape, flags)
    for (r, _), s in zip(shape.boxes(), tau.entries):
        assert min(s) == r and sorted(s) == list(range(r, max(s) + 1))


def test_render():
    lam = Partition((2, 1))
    assert render_tableau(lam, [{1, 2}, {2}, {3}]) == "[1 2][2] / [3]"
    assert render_tableau(lam, [2, 2, 3], compact=True) == "22/3"
    assert render_tableau(lam, [{10, 11}, 12, 13]) == "[10 11][12] / [13]"
    skew = SkewShape(Partition((2, 1)), Partition((1,)))
    assert render_tableau(skew, [1, 2], compact=True) == ".1/2"


CASES = [c for c in young_cases() if sum(c[0]) <= 5]


@pytest.mark.parametrize("shape, flags", CASES, ids=[f"{s}{f}" for s, f in CASES])
def test_enumeration_against_brute_force(shape, flags):
    boxes, svts = brute_force_svt(shape, flags)
    got = enumerate_svt(shape, flags)
    assert len({t.entries for t in got}) == len(got)
    assert {t.entries for t in got} == set(svts)
    _, ssyt = brute_force_ssyt(shape, flags)
    assert set(young_complex(shape, flags).facets) == set(ssyt)


@pytest.mark.parametrize("shape, flags", young_cases(), ids=[f"{s}{f}" for s, f in young_cases()])
def test_interior_faces_are_buch_tableaux(shape, flags):
    cx = young_complex(shape, flags)
    lam = Partition(shape)
    if cx.count_faces() > 5000:
        pytest.skip("face count above the brute-force budget")
    buch = {t.entries for t in enumerate_svt(shape, flags)}
    for F in cx.faces():
        tau = face_as_svt(cx, lam, F)
        assert is_limit_semistandard(tau, flags)
        assert cx.is_interior(F) == is_buch_semistandard(tau, flags) == (tau.entries in buch)


small_svts = st.lists(st.sets(st.integers(1, 4), min_size=1, max_size=3), min_size=3, max_size=3).map(
    lambda sets: YoungSVT(Partition((2, 1)), tuple(sets))
)


@settings(max_examples=150, deadline=None)
@given(small_svts)
def test_predicates_agree_with_contained_tableaux(tau):
    lam = tau.shape
    contained = [ssyt_ok(lam, t) for t in tau.contained_tableaux()]
    assert is_buch_semistandard(tau) == all(contained)
    assert is_limit_semistandard(tau) == any(contained)
