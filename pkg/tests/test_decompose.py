import pytest

from tabcomplex import (
    Topology,
    ValidationError,
    Vertex,
    VertexKind,
    build_complex,
    h_vector,
    homeomorphism_certificate,
    new_face,
    shelling_order,
    verify_shelling,
    vertex_decompose,
    young_complex,
)
from suite import suite, word_complex

B11, B12, B21 = (1, 1), (1, 2), (2, 1)
PAPER_ORDER = [(2, 2, 3), (1, 2, 3), (1, 1, 3), (1, 2, 2), (1, 1, 2)]


@pytest.fixture(scope="module")
def flagged():
    return young_complex((2, 1), (2, 3))


def test_shelling_order_flagged(flagged):
    cert = shelling_order(flagged)
    assert list(cert.facets) == PAPER_ORDER
    assert list(cert.epsilon) == [B11, B12, B21]
    assert list(cert.etas) == [0, 1, 1, 1, 2]
    assert h_vector(flagged) == [1, 3, 1]


def test_new_face_examples(flagged):
    top = new_face(flagged, (2, 2, 3))
    assert all(len(u) == 1 for u in top.movable)
    assert top.face == flagged.ambient and top.eta == 0
    nf = new_face(flagged, (1, 2, 3))
    assert nf.movable[0] == {1, 2} and nf.eta == 1
    nf = new_face(flagged, (1, 1, 2))
    assert nf.movable[1] == {1, 2} and nf.movable[2] == {2, 3} and nf.eta == 2


def test_new_face_rejects_non_facet(flagged):
    with pytest.raises(ValidationError):
        new_face(flagged, (2, 1, 3))


def test_verify_shelling(flagged):
    assert verify_shelling(flagged, PAPER_ORDER)
    bad = [(1, 1, 2), (2, 2, 3), (1, 2, 3), (1, 1, 3), (1, 2, 2)]
    assert not verify_shelling(flagged, bad)
    single = young_complex((1,), 1)
    assert verify_shelling(single, single.facets)


def test_single_facet():
    cx = young_complex((1,), 1)
    cert = shelling_order(cx)
    assert cert.new_faces == (cx.ambient,)
    assert h_vector(cx) == [1]
    assert vertex_decompose(cx).kind == "leaf"


def test_point_pair():
    cx = young_complex((1,), 2)
    tree = vertex_decompose(cx)
    assert tree.kind == "split" and tree.pivot == Vertex(B11, 2)
    assert list(tree.deletion.leaves()) == [(2,)] and list(tree.star.leaves()) == [(1,)]
    assert not list(tree.deletion.splits()) and not list(tree.star.splits())
    assert h_vector(cx) == [1, 1]
    assert homeomorphism_certificate(cx) is Topology.SPHERE


def test_topology():
    assert homeomorphism_certificate(young_complex((2, 1), 3)) is Topology.BALL
    words = word_complex()
    with pytest.raises(ValidationError):
        homeomorphism_certificate(words)
    assert homeomorphism_certificate(words, assume_shellable=True) is Topology.BALL


def test_flagged_tree_has_one_leaf_per_facet(flagged):
    leaves = list(vertex_decompose(flagged).leaves())
    assert sorted(leaves) == sorted(flagged.facets)


def test_decomposition_needs_poset():
    with pytest.raises(ValidationError):
        vertex_decompose(word_complex())


def test_custom_epsilon_changes_order_but_not_h(flagged):
    cert = shelling_order(flagged, epsilon=[B11, B21, B12])
    assert verify_shelling(flagged, cert.facets)
    assert h_vector(flagged, epsilon=[B11, B21, B12]) == [1, 3, 1]


def test_cone_vertices_are_stripped():
    # a cone pair appears once the ambient is larger than the union of facets
    base = young_complex((2, 1), (2, 3))
    P = base.problem
    amb = {x: set(P.chain(x)) for x in base.points}
    amb[B12] = {1, 2, 3}
    wide = build_complex(base.facets, amb, points=base.points, problem=P.with_chains({}, ambient=amb))
    assert wide.kind((B12, 3)) is VertexKind.CONE
    tree = vertex_decompose(wide)
    assert tree.kind == "cone-strip"
    assert sorted(tree.leaves()) == sorted(base.facets)


SUITE = suite()


@pytest.mark.parametrize("name, cx", SUITE, ids=[n for n, _ in SUITE])
def test_decomposition_and_shelling(name, cx):
    tree = vertex_decompose(cx)
    for node in tree.splits():
        v = node.pivot
        assert node.complex.is_safe(v) or node.complex.kind(v) is VertexKind.CONE
    cert = shelling_order(cx)
    assert list(tree.leaves()) == list(cert.facets)
    assert verify_shelling(cx, cert.facets)
    h = h_vector(cx)
    assert h[0] == 1 and min(h) >= 0 and sum(h) == len(cx.facets)
    for N, eta in zip(cert.new_faces, cert.etas):
        assert len(cx.vertex_set(N)) == eta


SMALL = [(n, cx) for n, cx in SUITE if cx.count_faces() <= 2000]


@pytest.mark.parametrize("name, cx", SMALL, ids=[n for n, _ in SMALL])
def test_minimal_new_faces(name, cx):
    cert = shelling_order(cx)
    faces = cx.faces()
    earlier = []
    for f, N in zip(cert.facets, cert.new_faces):
        for G in faces:
            if not cx.contains_tableau(G, f):
                continue
            new = not any(cx.contains_tableau(G, g) for g in earlier)
            assert new == all(g <= n for g, n in zip(G, N))
        earlier.append(f)
