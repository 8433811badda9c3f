"""Pure factors, joins, and recognition of abstract complexes as tableau complexes.

A pure complex is a tableau complex exactly when its vertices (after
removing cone vertices) split into blocks ``V_1, ..., V_k`` such that every
facet misses exactly one vertex of every block.  Equivalently the
complements ``V - f`` are rainbow for a proper ``k``-colouring of the graph
joining two vertices whenever some facet misses both; ``k`` is forced to be
the common size of those complements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .complexes import TableauComplex, build_complex
from .errors import InvariantViolation, SearchBudgetExceeded, ValidationError
from .labels import label_key

__all__ = [
    "AbstractComplex",
    "Recognition",
    "EXACT_SEARCH_LIMIT",
    "DEFAULT_SEARCH_BUDGET",
    "abstract_from_tableau_complex",
    "pure_factor_size",
    "is_pure_factor",
    "find_pure_factor_partition",
    "recognize_tableau_complex",
    "join_complexes",
    "boundary_of_simplex",
]

EXACT_SEARCH_LIMIT = 16
DEFAULT_SEARCH_BUDGET = 10**6


@dataclass(frozen=True, eq=False)
class AbstractComplex:
    """Simplicial complex given by its facets.

    ``vertices`` may list vertices lying in no facet.  Facets are stored as
    frozensets, deduplicated and sorted canonically.
    """

    vertices: tuple
    facets: tuple

    def __post_init__(self):
        verts = tuple(sorted(dict.fromkeys(self.vertices), key=label_key))
        known = set(verts)
        facets = []
        for f in self.facets:
            f = frozenset(f)
            if not f <= known:
                raise ValidationError(f"facet mentions unknown vertices {sorted(map(repr, f - known))}")
            facets.append(f)
        if not facets:
            raise ValidationError("a complex needs at least one facet")
        facets = list(dict.fromkeys(facets))
        for a, b in itertools.permutations(facets, 2):
            if a < b:
                raise ValidationError(f"facet {sorted(a, key=label_key)!r} lies inside another facet")
        facets.sort(key=lambda f: (len(f), sorted(label_key(v) for v in f)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", tuple(facets))

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def require_pure(self) -> None:
        if not self.is_pure:
            raise ValidationError("the complex is not pure")

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def used_vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    @cached_property
    def cone_vertices(self) -> tuple:
        common = frozenset.intersection(*self.facets)
        return tuple(v for v in self.vertices if v in common)

    @cached_property
    def unused_vertices(self) -> tuple:
        return tuple(v for v in self.vertices if v not in self.used_vertices)

    def core(self) -> "AbstractComplex":
        """Drop cone vertices and vertices lying in no facet."""
        drop = set(self.cone_vertices) | set(self.unused_vertices)
        return AbstractComplex(
            tuple(v for v in self.vertices if v not in drop), tuple(f - drop for f in self.facets)
        )

    def faces(self) -> list[frozenset]:
        """Every face, each once, ordered by size then canonically."""
        seen: set[frozenset] = set()
        for f in self.facets:
            items = sorted(f, key=label_key)
            for r in range(len(items) + 1):
                seen.update(frozenset(c) for c in itertools.combinations(items, r))
        return sorted(seen, key=lambda s: (len(s), sorted(label_key(v) for v in s)))

    def full_subcomplex(self, W: Iterable[Hashable]) -> "AbstractComplex":
        W = frozenset(W)
        pieces = {f & W for f in self.facets}
        maximal = [p for p in pieces if not any(p < q for q in pieces)]
        return AbstractComplex(tuple(v for v in self.vertices if v in W), tuple(maximal))

    def same_facets(self, other: "AbstractComplex") -> bool:
        return set(self.facets) == set(other.facets)

    def to_json(self) -> dict:
        from .labels import thaw

        return {
            "vertices": [thaw(v) for v in self.vertices],
            "facets": [[thaw(v) for v in sorted(f, key=label_key)] for f in self.facets],
        }


def abstract_from_tableau_complex(cx: TableauComplex) -> AbstractComplex:
    """Forget the tableau structure; vertices are ``(point, value)`` pairs."""
    verts = tuple((v.point, v.value) for v in cx.vertices)
    facets = tuple(frozenset((v.point, v.value) for v in cx.facet_vertex_set(f)) for f in cx.facets)
    return AbstractComplex(verts, facets)


def pure_factor_size(complex: AbstractComplex, W: Iterable[Hashable]) -> int | None:
    """The constant ``|f ∩ W|`` if ``W`` is a pure factor, else ``None``."""
    complex.require_pure()
    W = frozenset(W)
    sizes = {len(f & W) for f in complex.facets}
    return sizes.pop() if len(sizes) == 1 else None


def is_pure_factor(complex: AbstractComplex, W: Iterable[Hashable]) -> bool:
    return pure_factor_size(complex, W) is not None


def _colour(n: int, adjacency: list[set[int]], k: int, budget: int | None) -> list[int] | None:
    """Proper ``k``-colouring by DSatur-ordered backtracking.

    Returns ``None`` when none exists and raises
    :class:`SearchBudgetExceeded` after ``budget`` search nodes.
    """
    colour = [-1] * n
    nodes = 0

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colour[v] < 0:
                sat = len({colour[u] for u in adjacency[v] if colour[u] >= 0})
                key = (sat, len(adjacency[v]), -v)
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def rec(placed: int, used: int) -> bool:
        nonlocal nodes
        if placed == n:
            return True
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(f"colouring search exceeded {budget} nodes")
        v = pick()
        taken = {colour[u] for u in adjacency[v]}
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c not in taken:
                colour[v] = c
                if rec(placed + 1, max(used, c + 1)):
                    return True
        colour[v] = -1
        return False

    return colour if rec(0, 0) else None


def find_pure_factor_partition(
    complex: AbstractComplex, budget: int = DEFAULT_SEARCH_BUDGET
) -> list[tuple] | None:
    """Blocks ``V_i`` with ``|f ∩ V_i| = |V_i| - 1`` for every facet, or ``None``.

    Cone vertices and unused vertices are removed first.  The search is
    exhaustive up to :data:`EXACT_SEARCH_LIMIT` vertices; beyond that it
    stops after ``budget`` nodes with :class:`SearchBudgetExceeded` rather
    than claim that no partition exists.
    """
    complex.require_pure()
    core = complex.core()
    verts = core.vertices
    if not verts:
        return []
    index = {v: i for i, v in enumerate(verts)}
    complements = [[index[v] for v in verts if v not in f] for f in core.facets]
    k = len(complements[0])
    adjacency: list[set[int]] = [set() for _ in verts]
    for comp in complements:
        for a, b in itertools.combinations(comp, 2):
            adjacency[a].add(b)
            adjacency[b].add(a)
    limit = None if len(verts) <= EXACT_SEARCH_LIMIT else budget
    colours = _colour(len(verts), adjacency, k, limit)
    if colours is None:
        return None
    blocks = [tuple(v for v, c in zip(verts, colours) if c == i) for i in range(k)]
    blocks.sort(key=lambda b: [label_key(v) for v in b])
    for block in blocks:
        if pure_factor_size(core, block) != len(block) - 1:
            raise InvariantViolation("colouring does not give codimension-one factors")
    return blocks


@dataclass(frozen=True)
class Recognition:
    """Tableau data for a recognized complex.

    Point ``i`` (1-based) ranges over ``blocks[i-1]``; each facet ``f`` of
    the core becomes the tableau sending ``i`` to the unique vertex of
    ``blocks[i-1]`` it misses.
    """

    blocks: tuple
    facets: tuple
    cone_vertices: tuple
    unused_vertices: tuple

    @property
    def points(self) -> tuple:
        return tuple(range(1, len(self.blocks) + 1))

    def to_tableau_complex(self) -> TableauComplex:
        return build_complex(self.facets, [frozenset(b) for b in self.blocks], points=self.points)

    def rebuilt_core(self) -> AbstractComplex:
        """Core complex read back off the rebuilt tableau complex (vertex ``(i, y)`` becomes ``y``)."""
        cx = self.to_tableau_complex()
        verts = tuple(v.value for v in cx.vertices)
        facets = tuple(frozenset(v.value for v in cx.facet_vertex_set(f)) for f in cx.facets)
        return AbstractComplex(verts, facets)

    def is_isomorphic_to(self, complex: AbstractComplex) -> bool:
        core = complex.core()
        rebuilt = self.rebuilt_core()
        return set(rebuilt.vertices) == set(core.vertices) and rebuilt.same_facets(core)

    def to_json(self) -> dict:
        from .labels import thaw

        return {
            "points": list(self.points),
            "blocks": [[thaw(v) for v in b] for b in self.blocks],
            "facets": [[thaw(y) for y in f] for f in self.facets],
            "cone_vertices": [thaw(v) for v in self.cone_vertices],
            "unused_vertices": [thaw(v) for v in self.unused_vertices],
        }


def recognize_tableau_complex(
    complex: AbstractComplex, budget: int = DEFAULT_SEARCH_BUDGET
) -> Recognition | None:
    """Tableau-complex structure on a pure complex, or ``None`` if there is none."""
    blocks = find_pure_factor_partition(complex, budget)
    if blocks is None:
        return None
    core = complex.core()
    tableaux = []
    for f in core.facets:
        row = []
        for block in blocks:
            missing = [v for v in block if v not in f]
            row.append(missing[0])
        tableaux.append(tuple(row))
    tableaux.sort(key=lambda t: [label_key(y) for y in t])
    rec = Recognition(tuple(blocks), tuple(tableaux), complex.cone_vertices, complex.unused_vertices)
    if not rec.is_isomorphic_to(complex):
        raise InvariantViolation("rebuilt complex differs from the input")
    return rec


def join_complexes(complexes: Sequence[AbstractComplex]) -> AbstractComplex:
    """Facets are unions of one facet from each complex (vertex sets must be disjoint)."""
    seen: set = set()
    for c in complexes:
        overlap = seen & set(c.vertices)
        if overlap:
            raise ValidationError(f"joined complexes share vertices {sorted(map(repr, overlap))}")
        seen |= set(c.vertices)
    facets = [frozenset().union(*combo) for combo in itertools.product(*(c.facets for c in complexes))]
    return AbstractComplex(tuple(v for c in complexes for v in c.vertices), tuple(facets))


def boundary_of_simplex(vertices: Iterable[Hashable]) -> AbstractComplex:
    verts = tuple(vertices)
    if len(verts) < 1:
        raise ValidationError("a simplex needs a vertex")
    facets = [frozenset(c) for c in itertools.combinations(verts, len(verts) - 1)]
    return AbstractComplex(verts, tuple(facets))
