"""Tableau complexes.

Faces are set-valued tableaux: tuples of frozensets aligned with
``TableauComplex.points``.  Containment is the reversed one of simplicial
complexes; a facet is a single-valued tableau and the empty face is the
ambient relation ``E``.  The vertex ``(x -/-> y)`` of a face ``F`` is any
pair of ``E`` that ``F`` omits, so faces are never stored as vertex sets.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import CapExceeded, InvariantViolation, ValidationError
from .labels import label_key
from .poset import DEFAULT_MAX_TABLEAUX, PosetTableauProblem, Tableau, enumerate_tableaux

__all__ = [
    "DEFAULT_MAX_FACES",
    "Face",
    "Vertex",
    "VertexKind",
    "TableauComplex",
    "build_complex",
    "complex_from_problem",
]

DEFAULT_MAX_FACES = 10**7

Face = tuple  # tuple[frozenset, ...]


class Vertex(NamedTuple):
    """The vertex ``(point -/-> value)``: the ambient relation minus one pair."""

    point: Hashable
    value: Hashable


class VertexKind(enum.Enum):
    NORMAL = "normal"
    CONE = "cone"
    PHANTOM = "phantom"


@dataclass(frozen=True, eq=False)
class TableauComplex:
    """The tableau complex of a facet set ``T`` inside an ambient relation ``E``.

    Build instances with :func:`build_complex` or :func:`complex_from_problem`.
    ``problem`` records poset provenance when the facets come from a
    :class:`PosetTableauProblem`; it enables the poset-only operations.
    """

    points: tuple
    facets: tuple
    ambient: Face
    problem: PosetTableauProblem | None = None

    # -- derived data -------------------------------------------------------

    @cached_property
    def point_index(self) -> dict[Hashable, int]:
        return {x: i for i, x in enumerate(self.points)}

    @cached_property
    def facet_set(self) -> frozenset:
        return frozenset(self.facets)

    def value_key(self, y: Hashable):
        if self.problem is not None and y in self.problem.y_poset:
            return (0, self.problem.y_poset.index[y])
        return (1, label_key(y))

    def sorted_values(self, values: Iterable[Hashable]) -> list:
        return sorted(values, key=self.value_key)

    @cached_property
    def union_of_facets(self) -> Face:
        used = [set() for _ in self.points]
        for f in self.facets:
            for i, y in enumerate(f):
                used[i].add(y)
        return tuple(frozenset(s) for s in used)

    @cached_property
    def pairs(self) -> list[Vertex]:
        """Every pair of ``E`` in canonical order, phantom ones included."""
        return [Vertex(x, y) for x, vals in zip(self.points, self.ambient) for y in self.sorted_values(vals)]

    @cached_property
    def vertex_kinds(self) -> dict[Vertex, VertexKind]:
        used = self.union_of_facets
        kinds = {}
        for i, x in enumerate(self.points):
            for y in self.sorted_values(self.ambient[i]):
                if y not in used[i]:
                    kinds[Vertex(x, y)] = VertexKind.CONE
                elif len(used[i]) == 1:
                    kinds[Vertex(x, y)] = VertexKind.PHANTOM
                else:
                    kinds[Vertex(x, y)] = VertexKind.NORMAL
        return kinds

    def _of_kind(self, *kinds: VertexKind) -> list[Vertex]:
        return [v for v, k in self.vertex_kinds.items() if k in kinds]

    @property
    def vertices(self) -> list[Vertex]:
        """Actual vertices (phantom pairs excluded)."""
        return self._of_kind(VertexKind.NORMAL, VertexKind.CONE)

    @property
    def cone_vertices(self) -> list[Vertex]:
        return self._of_kind(VertexKind.CONE)

    @property
    def phantom_pairs(self) -> list[Vertex]:
        return self._of_kind(VertexKind.PHANTOM)

    @property
    def normal_vertices(self) -> list[Vertex]:
        return self._of_kind(VertexKind.NORMAL)

    @cached_property
    def ambient_size(self) -> int:
        return sum(len(s) for s in self.ambient)

    @property
    def dimension(self) -> int:
        return self.ambient_size - len(self.points) - 1

    # -- conversions --------------------------------------------------------

    def face(self, F: Mapping[Hashable, Iterable] | Sequence[Iterable]) -> Face:
        """Normalise a mapping or sequence of value sets into a face tuple."""
        if isinstance(F, Mapping):
            if set(F) != set(self.points):
                raise ValidationError("set-valued tableau must assign values to exactly the points of X")
            F = [F[x] for x in self.points]
        F = tuple(frozenset(s) for s in F)
        if len(F) != len(self.points):
            raise ValidationError(f"expected {len(self.points)} value sets, got {len(F)}")
        if any(not s for s in F):
            raise ValidationError("set-valued tableaux need a nonempty set at every point")
        return F

    def tableau(self, f: Mapping[Hashable, Hashable] | Sequence[Hashable]) -> Tableau:
        if isinstance(f, Mapping):
            return tuple(f[x] for x in self.points)
        f = tuple(f)
        if len(f) != len(self.points):
            raise ValidationError(f"expected {len(self.points)} values, got {len(f)}")
        return f

    def as_mapping(self, F: Face | Tableau) -> dict:
        return dict(zip(self.points, F))

    def vertex_set(self, F: Face) -> frozenset[Vertex]:
        """Vertices of ``F`` (pairs of ``E`` that ``F`` omits)."""
        F = self._as_face(F)
        return frozenset(Vertex(x, y) for x, e, s in zip(self.points, self.ambient, F) for y in e - s)

    def facet_vertex_set(self, f: Tableau) -> frozenset[Vertex]:
        return frozenset(Vertex(x, y) for x, e, v in zip(self.points, self.ambient, f) for y in e if y != v)

    def _as_face(self, F) -> Face:
        if isinstance(F, Mapping):
            return self.face(F)
        F = tuple(F)
        if F and not isinstance(F[0], frozenset):
            F = tuple(frozenset(s) for s in F)
        return F

    @staticmethod
    def point_face(f: Tableau) -> Face:
        """A single-valued tableau viewed as a set-valued one."""
        return tuple(frozenset((y,)) for y in f)

    # -- faces --------------------------------------------------------------

    def contains_tableau(self, F: Face, f: Tableau) -> bool:
        return all(y in s for y, s in zip(f, F))

    def within_ambient(self, F: Face) -> bool:
        return all(s <= e for s, e in zip(F, self.ambient))

    def is_face(self, F) -> bool:
        F = self._as_face(F)
        if len(F) != len(self.points) or not self.within_ambient(F):
            return False
        return any(self.contains_tableau(F, f) for f in self.facets)

    def _require_face(self, F) -> Face:
        F = self._as_face(F)
        if not self.is_face(F):
            raise ValidationError("not a face of this complex")
        return F

    def codimension(self, F) -> int:
        """Number of extra values ``|F| - |X|``."""
        F = self._require_face(F)
        return sum(len(s) for s in F) - len(self.points)

    def face_dimension(self, F) -> int:
        F = self._as_face(F)
        return self.ambient_size - sum(len(s) for s in F) - 1

    @cached_property
    def _subsets(self) -> list[list[frozenset]]:
        """Nonempty subsets of each ``E(x)`` in canonical order."""
        out = []
        for vals in self.ambient:
            vals = self.sorted_values(vals)
            subs = [frozenset(c) for r in range(1, len(vals) + 1) for c in itertools.combinations(vals, r)]
            rank = {y: k for k, y in enumerate(vals)}
            subs.sort(key=lambda s: sorted(rank[y] for y in s))
            out.append(subs)
        return out

    def iter_faces(self) -> Iterator[Face]:
        """Yield every face exactly once, in canonical order.

        Backtracks over the points choosing ``F(x)`` among subsets of
        ``E(x)`` and keeps only the facets still contained in the partial
        choice, pruning when none is left.
        """
        n = len(self.points)
        facets = self.facets
        chosen: list[frozenset] = [frozenset()] * n

        def rec(i: int, alive: list[int]) -> Iterator[Face]:
            if i == n:
                yield tuple(chosen)
                return
            by_value: dict[Hashable, list[int]] = {}
            for k in alive:
                by_value.setdefault(facets[k][i], []).append(k)
            for S in self._subsets[i]:
                nxt = [k for y in S if y in by_value for k in by_value[y]]
                if nxt:
                    chosen[i] = S
                    yield from rec(i + 1, sorted(nxt))

        yield from rec(0, list(range(len(facets))))

    def count_faces(self) -> int:
        """Number of faces, by memoised counting over the same recursion."""
        n = len(self.points)
        memo: dict = {}

        def rec(i: int, alive: frozenset) -> int:
            if i == n:
                return 1
            key = (i, alive)
            if key not in memo:
                by_value: dict = {}
                for k in alive:
                    by_value.setdefault(self.facets[k][i], set()).add(k)
                total = 0
                for S in self._subsets[i]:
                    nxt = frozenset().union(*(by_value[y] for y in S if y in by_value))
                    if nxt:
                        total += rec(i + 1, nxt)
                memo[key] = total
            return memo[key]

        return rec(0, frozenset(range(len(self.facets))))

    def faces(self, max_faces: int = DEFAULT_MAX_FACES) -> list[Face]:
        """All faces (empty face ``E`` and the facets included), canonical order."""
        count = self.count_faces()
        if count > max_faces:
            raise CapExceeded(f"complex has {count} faces, more than the cap {max_faces}")
        return list(self.iter_faces())

    def f_vector(self, max_faces: int = DEFAULT_MAX_FACES) -> list[int]:
        """``(f_-1, f_0, ..., f_d)``."""
        fv = [0] * (self.dimension + 2)
        for F in self.faces(max_faces):
            fv[self.face_dimension(F) + 1] += 1
        return fv

    def ridge_incidence(self) -> dict[Face, int]:
        """Map every ridge to the number of facets containing it."""
        counts: dict[Face, int] = {}
        facet_set = self.facet_set
        for f in self.facets:
            base = self.point_face(f)
            for i, e in enumerate(self.ambient):
                for y in e:
                    if y == f[i]:
                        continue
                    ridge = base[:i] + (frozenset((f[i], y)),) + base[i + 1:]
                    counts[ridge] = counts.get(ridge, 0) + 1
        for ridge, c in counts.items():
            # recount independently: a ridge holds exactly the two tableaux it contains
            contained = sum(1 for g in itertools.product(*ridge) if g in facet_set)
            if c != contained or c > 2:
                raise InvariantViolation(f"ridge lies in {max(c, contained)} facets")
        return counts

    def boundary_ridges(self) -> list[Face]:
        return [r for r, c in self.ridge_incidence().items() if c == 1]

    # -- vertices and subcomplexes -----------------------------------------

    def _vertex(self, v) -> Vertex:
        v = Vertex(*v)
        i = self.point_index.get(v.point)
        if i is None or v.value not in self.ambient[i]:
            raise ValidationError(f"{v!r} is not a pair of the ambient relation")
        return v

    def kind(self, v) -> VertexKind:
        return self.vertex_kinds[self._vertex(v)]

    def vertex_face(self, v) -> Face:
        """The face whose only vertex is ``v``: ``E`` with ``v.value`` removed at ``v.point``."""
        v = self._vertex(v)
        if self.kind(v) is VertexKind.PHANTOM:
            raise ValidationError(f"{v!r} is a phantom pair, not a vertex")
        i = self.point_index[v.point]
        return self.ambient[:i] + (self.ambient[i] - {v.value},) + self.ambient[i + 1:]

    def is_safe(self, v) -> bool:
        """Relabelling ``v.point`` to ``v.value`` keeps every facet inside ``T``."""
        v = self._vertex(v)
        i = self.point_index[v.point]
        return all(f[:i] + (v.value,) + f[i + 1:] in self.facet_set for f in self.facets)

    def _with(self, facets: Iterable[Tableau], ambient: Face | None = None, problem=...) -> "TableauComplex":
        facets = tuple(facets)
        if not facets:
            raise ValidationError("resulting facet set is empty")
        return TableauComplex(
            self.points,
            facets,
            self.ambient if ambient is None else ambient,
            self.problem if problem is ... else problem,
        )

    def star(self, v) -> "TableauComplex":
        """Star of ``(x -/-> y)``: facets with ``f(x) != y``, same ambient."""
        v = self._vertex(v)
        i = self.point_index[v.point]
        kept = [f for f in self.facets if f[i] != v.value]
        if not kept:
            raise ValidationError(f"{v!r} is a phantom vertex; its star is empty")
        problem = None
        if self.problem is not None:
            chain = [y for y in self.problem.chain(v.point) if y != v.value]
            problem = self.problem.with_chains({v.point: chain})
        return self._with(kept, problem=problem)

    def deletion(self, v) -> "TableauComplex":
        """Deletion of a safe or cone vertex: facets with ``f(x) == y``."""
        v = self._vertex(v)
        if self.kind(v) is VertexKind.CONE:
            return self
        if not self.is_safe(v):
            raise ValidationError(f"deletion of {v!r} is not pure: the vertex is neither safe nor a cone vertex")
        i = self.point_index[v.point]
        problem = None
        if self.problem is not None:
            problem = self.problem.with_chains({v.point: [v.value]})
        return self._with((f for f in self.facets if f[i] == v.value), problem=problem)

    def link(self, F) -> "TableauComplex":
        """Link of a face: facets contained in ``F``, with ``F`` as ambient."""
        F = self._require_face(F)
        problem = None
        if self.problem is not None:
            problem = self.problem.with_chains(dict(zip(self.points, F)), ambient=dict(zip(self.points, F)))
        return self._with((f for f in self.facets if self.contains_tableau(F, f)), ambient=F, problem=problem)

    # -- interior faces -----------------------------------------------------

    def is_interior(self, F, method: str = "bruteforce") -> bool:
        """Whether a face is interior (meaningful for balls and spheres).

        ``bruteforce`` checks that every single-valued selection of ``F`` is a
        facet; ``poset`` checks the setwise order conditions of the generating
        poset problem instead.
        """
        F = self._require_face(F)
        if method == "bruteforce":
            return all(g in self.facet_set for g in itertools.product(*F))
        if method == "poset":
            if self.problem is None:
                raise ValidationError("method='poset' needs a complex built from a poset problem")
            P = self.problem
            X, Y = P.x_poset, P.y_poset
            if any(not s <= set(P.chain(x)) for x, s in zip(self.points, F)):
                return False
            at = dict(zip(self.points, F))
            for i, j in X.strict_pairs:
                lo, hi = at[X.elements[i]], at[X.elements[j]]
                if not all(Y.le(a, b) for a in lo for b in hi):
                    return False
            for a_pt, b_pt in P.strict_pairs:
                if not all(Y.lt(a, b) for a in at[a_pt] for b in at[b_pt]):
                    return False
            return True
        raise ValidationError(f"unknown interior method {method!r}")


def build_complex(
    facets: Iterable[Mapping[Hashable, Hashable] | Sequence[Hashable]],
    ambient: Mapping[Hashable, Iterable] | Sequence[Iterable] | None = None,
    *,
    points: Sequence[Hashable] | None = None,
    problem: PosetTableauProblem | None = None,
) -> TableauComplex:
    """Tableau complex with the given facets.

    Facets are mappings ``point -> value`` or sequences aligned with
    ``points``.  ``ambient`` defaults to the union of the facets.  Duplicate
    facets are dropped; single-valued tableaux never contain each other, so
    nothing else needs removing.
    """
    facets = list(facets)
    if not facets:
        raise ValidationError("a tableau complex needs at least one facet")
    if points is None:
        if problem is not None:
            points = problem.points
        elif isinstance(facets[0], Mapping):
            points = tuple(facets[0])
        else:
            raise ValidationError("points must be given when facets are sequences")
    points = tuple(points)
    if len(set(points)) != len(points):
        raise ValidationError("duplicate points")
    rows = []
    for f in facets:
        if isinstance(f, Mapping):
            if set(f) != set(points):
                raise ValidationError(f"facet {f!r} does not have domain {points!r}")
            rows.append(tuple(f[x] for x in points))
        else:
            f = tuple(f)
            if len(f) != len(points):
                raise ValidationError(f"facet {f!r} has the wrong length")
            rows.append(f)
    rows = list(dict.fromkeys(rows))
    union = [frozenset(f[i] for f in rows) for i in range(len(points))]
    if ambient is None:
        amb = tuple(union)
    else:
        if isinstance(ambient, Mapping):
            if set(ambient) - set(points):
                raise ValidationError("ambient mentions unknown points")
            amb = tuple(frozenset(ambient.get(x, ())) for x in points)
        else:
            amb = tuple(frozenset(s) for s in ambient)
            if len(amb) != len(points):
                raise ValidationError("ambient has the wrong length")
        for x, u, e in zip(points, union, amb):
            if not u <= e:
                raise ValidationError(f"facet values {sorted(map(repr, u - e))} at {x!r} lie outside the ambient")
    cx = TableauComplex(points, (), amb, problem)
    key = lambda f: tuple(cx.value_key(y) for y in f)
    if problem is None:
        rows.sort(key=key)
    return TableauComplex(points, tuple(rows), amb, problem)


def complex_from_problem(problem: PosetTableauProblem, max_tableaux: int = DEFAULT_MAX_TABLEAUX) -> TableauComplex:
    """Tableau complex of a poset problem (facets in enumeration order)."""
    facets = enumerate_tableaux(problem, max_tableaux)
    if not facets:
        raise ValidationError("the poset problem has no tableaux")
    return build_complex(facets, problem.ambient, points=problem.points, problem=problem)
