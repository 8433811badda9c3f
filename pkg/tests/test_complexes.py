import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tabcomplex import (
    CapExceeded,
    ValidationError,
    Vertex,
    VertexKind,
    build_complex,
    young_complex,
)
from oracles import f_vector_from_vertex_sets, product_faces
from suite import suite, word_complex

B11, B12, B21 = (1, 1), (1, 2), (2, 1)


@pytest.fixture(scope="module")
def c21():
    return young_complex((2, 1), 3)


@pytest.fixture(scope="module")
def words():
    return word_complex()


def face_set(cx):
    return set(cx.faces())


def test_word_complex_shape(words):
    assert len(words.facets) == 7
    assert words.dimension == 2
    # position 2 is always "e": the pair (2, e) is phantom and not a vertex
    assert words.kind((2, "e")) is VertexKind.PHANTOM
    assert len(words.vertices) == 6


def test_word_complex_f_vector_matches_brute_force(words):
    vsets = [words.facet_vertex_set(f) for f in words.facets]
    fv = words.f_vector()
    assert fv == f_vector_from_vertex_sets(vsets)
    assert fv[1] - fv[2] + fv[3] == 1


def test_word_complex_has_deld_boundary(words):
    ridge = words.face({1: "d", 2: "e", 3: "l", 4: "dl"})
    assert words.ridge_incidence()[ridge] == 1


def test_word_complex_star(words):
    star = words.star((1, "d"))
    assert {"".join(f) for f in star.facets} == {"head", "heal", "held", "hell"}


def test_word_complex_unsafe_vertex(words):
    assert not words.is_safe((4, "d"))
    with pytest.raises(ValidationError):
        words.deletion((4, "d"))


def test_young_21_dimension(c21):
    assert c21.dimension == 3
    assert c21.ambient_size == 7
    assert c21.codimension(c21.ambient) == 4


def test_single_facet_complex():
    cx = build_complex([("a", "b")], points=(1, 2))
    assert cx.faces() == [cx.ambient]
    assert cx.vertices == []
    assert all(cx.kind(v) is VertexKind.PHANTOM for v in cx.pairs)
    assert cx.is_safe((1, "a"))


def test_codimension_of_facet_and_ridge(c21):
    f = c21.facets[0]
    assert c21.codimension(c21.point_face(f)) == 0
    ridge = c21.face({B11: {1, 2}, B12: {2}, B21: {3}})
    assert c21.codimension(ridge) == 1


def test_is_face_examples(c21):
    assert c21.is_face(c21.ambient)
    assert c21.is_face(c21.face({B11: {1, 2}, B12: {3}, B21: {3}}))
    assert not c21.is_face(c21.face({B11: {2}, B12: {1}, B21: {3}}))


def test_faces_of_a_point():
    cx = young_complex((1,), 2)
    assert sorted(map(sorted, (F[0] for F in cx.faces()))) == [[1], [1, 2], [2]]
    assert cx.f_vector() == [1, 2]
    assert list(cx.ridge_incidence().values()) == [2]


def test_face_cap(c21):
    with pytest.raises(CapExceeded):
        c21.faces(max_faces=5)


def test_star_and_deletion_examples(c21):
    star = c21.star((B11, 2))
    assert len(star.facets) == 6 and all(f[0] == 1 for f in star.facets)
    assert c21.is_safe((B21, 3))
    dele = c21.deletion((B21, 3))
    assert set(dele.facets) == {f for f in c21.facets if f[2] == 3}


def test_cone_vertex_star_and_deletion():
    cx = build_complex([("a", "x"), ("b", "x")], ambient=[{"a", "b"}, {"x", "y"}], points=(1, 2))
    v = Vertex(2, "y")
    assert cx.kind(v) is VertexKind.CONE
    assert set(cx.star(v).facets) == set(cx.facets)
    assert set(cx.deletion(v).facets) == set(cx.facets)


def test_link_examples(c21):
    f = c21.facets[3]
    link = c21.link(c21.point_face(f))
    assert link.facets == (f,) and link.vertices == []
    assert set(c21.link(c21.ambient).facets) == set(c21.facets)
    F = c21.face({B11: {1}, B12: {1, 2, 3}, B21: {2, 3}})
    link = c21.link(F)
    assert set(link.facets) == {f for f in c21.facets if f[0] == 1}
    expected = {G for G in c21.faces() if all(g <= s for g, s in zip(G, F))}
    assert face_set(link) == expected


def test_interior_vertex(c21):
    interior = [v for v in c21.vertices if c21.is_interior(c21.vertex_face(v))]
    assert interior == [Vertex(B11, 2)]


def test_sphere_faces_all_interior():
    cx = young_complex((1,), 2)
    assert all(cx.is_interior(F) for F in cx.faces())


def test_flagged_21_f_vector():
    cx = young_complex((2, 1), (2, 3))
    fv = cx.f_vector()
    assert fv[-1] == 5
    assert sum((-1) ** i * n for i, n in enumerate(fv[1:])) == 1


SUITE = suite()
SMALL = [(name, cx) for name, cx in SUITE if cx.count_faces() <= 10**4]


@pytest.mark.parametrize("name, cx", SMALL, ids=[n for n, _ in SMALL])
def test_structural_invariants(name, cx):
    d = cx.ambient_size - len(cx.points)
    assert all(len(cx.facet_vertex_set(f)) == d for f in cx.facets)
    faces = cx.faces()
    assert set(faces) == set(product_faces(cx.points, cx.facets, cx.ambient))
    for F in faces:
        assert cx.codimension(F) + len(cx.vertex_set(F)) == d
        assert cx.is_interior(F, "bruteforce") == cx.is_interior(F, "poset")
    assert set(cx.ridge_incidence().values()) <= {1, 2}
    assert cx.f_vector() == f_vector_from_vertex_sets([cx.facet_vertex_set(f) for f in cx.facets])


def _deletion_as_complex(cx, faces, v):
    i = cx.point_index[v.point]
    kept = [F for F in faces if v.value in F[i]]
    sizes = {len(cx.vertex_set(F)) for F in kept if not any(G != F and all(g <= s for g, s in zip(G, F)) for G in kept)}
    return sizes


@pytest.mark.parametrize("name, cx", SMALL[:12] + [("words", word_complex())], ids=[n for n, _ in SMALL[:12]] + ["words"])
def test_star_deletion_link_identities(name, cx):
    faces = face_set(cx)
    for v in cx.vertices:
        maximal_sizes = _deletion_as_complex(cx, faces, v)
        safe = cx.kind(v) is VertexKind.CONE or cx.is_safe(v)
        assert (len(maximal_sizes) == 1) == safe
        if not safe:
            continue
        star, dele = face_set(cx.star(v)), face_set(cx.deletion(v))
        assert star | dele == faces
        # link faces live inside E minus the pair; lift them back into E
        i = cx.point_index[v.point]
        lifted = {G[:i] + (G[i] | {v.value},) + G[i + 1:] for G in face_set(cx.link(cx.vertex_face(v)))}
        assert star & dele == lifted


@st.composite
def facet_lists(draw):
    k = draw(st.integers(1, 3))
    alphabet = [draw(st.sets(st.sampled_from("abc"), min_size=1)) for _ in range(k)]
    rows = draw(st.lists(st.tuples(*(st.sampled_from(sorted(a)) for a in alphabet)), min_size=1, max_size=6))
    return k, rows


@settings(max_examples=60, deadline=None)
@given(facet_lists())
def test_random_complexes_against_brute_force(data):
    k, rows = data
    cx = build_complex(rows, points=tuple(range(k)))
    assert set(cx.faces()) == set(product_faces(cx.points, cx.facets, cx.ambient))
    assert set(cx.ridge_incidence().values()) <= {1, 2}
    for v in cx.pairs:
        on = sum(1 for f in cx.facets if f[cx.point_index[v.point]] == v.value)
        expected = VertexKind.PHANTOM if on == len(cx.facets) else VertexKind.CONE if on == 0 else VertexKind.NORMAL
        assert cx.kind(v) is expected
