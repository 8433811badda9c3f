"""Vertex decompositions, explicit shellings and h-vectors of poset tableau complexes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterator, NamedTuple, Sequence

from .complexes import Face, TableauComplex, Vertex, VertexKind
from .errors import InvariantViolation, ValidationError
from .poset import Tableau, linear_extension

__all__ = [
    "DecompositionTree",
    "ShellingCertificate",
    "NewFace",
    "Topology",
    "vertex_decompose",
    "choose_pivot",
    "shelling_order",
    "verify_shelling",
    "new_face",
    "h_vector",
    "homeomorphism_certificate",
]


def _require_problem(cx: TableauComplex):
    if cx.problem is None:
        raise ValidationError("this operation needs a complex built from a poset problem")
    return cx.problem


def _epsilon(cx: TableauComplex, epsilon: Sequence[Hashable] | None) -> list:
    problem = _require_problem(cx)
    if epsilon is None:
        return linear_extension(problem.x_poset)
    epsilon = list(epsilon)
    X = problem.x_poset
    if len(epsilon) != len(X) or set(epsilon) != set(X.elements):
        raise ValidationError("epsilon must list every point exactly once")
    pos = {x: k for k, x in enumerate(epsilon)}
    if any(pos[X.elements[i]] > pos[X.elements[j]] for i, j in X.strict_pairs):
        raise ValidationError("epsilon is not a linear extension")
    return epsilon


def _chain_position(cx: TableauComplex, x: Hashable, y: Hashable) -> int:
    return cx.problem.chain(x).index(y)


def choose_pivot(cx: TableauComplex, epsilon: Sequence[Hashable] | None = None) -> Vertex | None:
    """Safe pivot ``(m -/-> y_m)`` used by the decomposition.

    ``m`` is the epsilon-largest point carrying a normal (neither cone nor
    phantom) vertex, and ``y_m`` the largest value any facet takes at ``m``.
    Returns ``None`` for a single facet.
    """
    eps = _epsilon(cx, epsilon)
    normal_points = {v.point for v in cx.normal_vertices}
    if not normal_points:
        return None
    m = max(normal_points, key=eps.index)
    i = cx.point_index[m]
    y_m = max({f[i] for f in cx.facets}, key=lambda y: _chain_position(cx, m, y))
    return Vertex(m, y_m)


@dataclass(frozen=True, eq=False)
class DecompositionTree:
    """Node of a vertex decomposition.

    ``kind`` is ``"leaf"`` (one facet), ``"cone-strip"`` (``stripped`` cone
    vertices removed, ``child`` is the core) or ``"split"`` at ``pivot`` into
    ``deletion`` and ``star``.
    """

    kind: str
    complex: TableauComplex
    pivot: Vertex | None = None
    deletion: "DecompositionTree | None" = None
    star: "DecompositionTree | None" = None
    child: "DecompositionTree | None" = None
    stripped: tuple = ()

    def leaves(self) -> Iterator[Tableau]:
        """Facets in shelling order: deletion leaves before star leaves."""
        if self.kind == "leaf":
            yield self.complex.facets[0]
        elif self.kind == "cone-strip":
            yield from self.child.leaves()
        else:
            yield from self.deletion.leaves()
            yield from self.star.leaves()

    def splits(self) -> Iterator["DecompositionTree"]:
        if self.kind == "split":
            yield self
            yield from self.deletion.splits()
            yield from self.star.splits()
        elif self.kind == "cone-strip":
            yield from self.child.splits()

    def to_json(self) -> dict:
        from .labels import thaw

        if self.kind == "leaf":
            return {"kind": "leaf", "facet": thaw(self.complex.facets[0])}
        if self.kind == "cone-strip":
            return {
                "kind": "cone-strip",
                "stripped": [[thaw(v.point), thaw(v.value)] for v in self.stripped],
                "child": self.child.to_json(),
            }
        return {
            "kind": "split",
            "pivot": [thaw(self.pivot.point), thaw(self.pivot.value)],
            "deletion": self.deletion.to_json(),
            "star": self.star.to_json(),
        }


def vertex_decompose(cx: TableauComplex, epsilon: Sequence[Hashable] | None = None) -> DecompositionTree:
    """Vertex decomposition following the constructive ball/sphere argument."""
    eps = _epsilon(cx, epsilon)

    def rec(node: TableauComplex) -> DecompositionTree:
        cones = node.cone_vertices
        if cones:
            core = node.link(node.union_of_facets)
            return DecompositionTree("cone-strip", node, stripped=tuple(cones), child=rec(core))
        pivot = choose_pivot(node, eps)
        if pivot is None:
            if len(node.facets) != 1:
                raise InvariantViolation("no normal vertex but several facets")
            return DecompositionTree("leaf", node)
        if not node.is_safe(pivot):
            raise InvariantViolation(f"pivot {pivot!r} is not safe")
        return DecompositionTree(
            "split", node, pivot=pivot, deletion=rec(node.deletion(pivot)), star=rec(node.star(pivot))
        )

    return rec(cx)


class NewFace(NamedTuple):
    """``U`` (upward-movable values), minimal new face ``N`` and ``eta = |vertices of N|``."""

    movable: Face
    face: Face
    eta: int


def new_face(cx: TableauComplex, f: Tableau) -> NewFace:
    """Minimal new face of facet ``f`` in the explicit shelling."""
    problem = _require_problem(cx)
    f = cx.tableau(f)
    if f not in cx.facet_set:
        raise ValidationError(f"{f!r} is not a facet")
    Y = problem.y_poset
    U, N = [], []
    for i, (x, e) in enumerate(zip(cx.points, cx.ambient)):
        up = frozenset(
            y for y in e if Y.le(f[i], y) and (f[:i] + (y,) + f[i + 1:]) in cx.facet_set
        )
        U.append(up)
        N.append(frozenset((f[i],)) | (e - up))
    eta = sum(len(u) for u in U) - len(cx.points)
    return NewFace(tuple(U), tuple(N), eta)


@dataclass(frozen=True)
class ShellingCertificate:
    epsilon: tuple
    facets: tuple
    new_faces: tuple
    etas: tuple

    def to_json(self, cx: TableauComplex) -> dict:
        from .documents import face_to_json
        from .labels import thaw

        return {
            "epsilon": [thaw(x) for x in self.epsilon],
            "facets": [[thaw(y) for y in f] for f in self.facets],
            "new_faces": [face_to_json(cx, N) for N in self.new_faces],
            "eta": list(self.etas),
        }


def shelling_order(cx: TableauComplex, epsilon: Sequence[Hashable] | None = None) -> ShellingCertificate:
    """Facets compared at the epsilon-largest point where they differ, larger label first."""
    eps = _epsilon(cx, epsilon)
    idx = [cx.point_index[x] for x in reversed(eps)]

    def key(f: Tableau):
        return tuple(-_chain_position(cx, cx.points[i], f[i]) for i in idx)

    order = sorted(cx.facets, key=key)
    news = [new_face(cx, f) for f in order]
    return ShellingCertificate(tuple(eps), tuple(order), tuple(n.face for n in news), tuple(n.eta for n in news))


def verify_shelling(cx: TableauComplex, ordered: Sequence[Tableau]) -> bool:
    """Check the shelling condition on vertex sets, independently of any order rule.

    For every ``i``, each intersection ``F_i ∩ F_j`` (``j < i``) must lie in
    some ``F_i ∩ F_k`` (``k < i``) of codimension one in ``F_i``.
    """
    ordered = [cx.tableau(f) for f in ordered]
    if sorted(ordered, key=repr) != sorted(cx.facets, key=repr):
        raise ValidationError("ordered list is not a permutation of the facets")
    vsets = [cx.facet_vertex_set(f) for f in ordered]
    for i in range(1, len(vsets)):
        Fi = vsets[i]
        inters = [Fi & vsets[j] for j in range(i)]
        ridges = [I for I in inters if len(I) == len(Fi) - 1]
        if not all(any(I <= R for R in ridges) for I in inters):
            return False
    return True


def h_vector(cx: TableauComplex, epsilon: Sequence[Hashable] | None = None) -> list[int]:
    """``h_j`` = number of facets with ``eta = j``; trailing zeros dropped."""
    cert = shelling_order(cx, epsilon)
    h = [0] * (cx.ambient_size - len(cx.points) + 1)
    for eta in cert.etas:
        h[eta] += 1
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


class Topology(enum.Enum):
    BALL = "ball"
    SPHERE = "sphere"


def homeomorphism_certificate(cx: TableauComplex, assume_shellable: bool = False) -> Topology:
    """Ball or sphere, decided by the presence of boundary ridges.

    Only valid for shellable complexes: guaranteed for poset complexes,
    otherwise the caller must vouch with ``assume_shellable=True``.
    """
    if cx.problem is None and not assume_shellable:
        raise ValidationError("topology of a non-poset complex is only reported with assume_shellable=True")
    if any(c == 1 for c in cx.ridge_incidence().values()):
        return Topology.BALL
    if cx.cone_vertices:
        raise InvariantViolation("a complex with cone vertices has boundary ridges")
    return Topology.SPHERE
