"""Finite posets and order-preserving tableaux between them.

A tableau is a function from the points of a poset ``X`` to a poset ``Y``.
Throughout the package a tableau is stored as a plain tuple of ``Y``-labels
aligned with ``X.elements``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import CapExceeded, ValidationError

__all__ = [
    "DEFAULT_MAX_TABLEAUX",
    "FinitePoset",
    "PosetTableauProblem",
    "Tableau",
    "build_poset",
    "chain_poset",
    "linear_extension",
    "enumerate_tableaux",
]

DEFAULT_MAX_TABLEAUX = 10**6

Tableau = tuple


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """A finite poset given by its full (reflexive, transitive) relation.

    ``relation[i, j]`` is true iff ``elements[i] <= elements[j]``.  Use
    :func:`build_poset` to construct one from cover relations.
    """

    elements: tuple
    relation: np.ndarray = field(repr=False)

    def __post_init__(self):
        rel = np.asarray(self.relation, dtype=bool)
        n = len(self.elements)
        if rel.shape != (n, n):
            raise ValidationError(f"relation must be {n}x{n}, got {rel.shape}")
        if len(set(self.elements)) != n:
            raise ValidationError("duplicate poset elements")
        if not rel.diagonal().all():
            raise ValidationError("relation is not reflexive")
        if n and (rel.astype(np.int64) @ rel.astype(np.int64) > 0)[~rel].any():
            raise ValidationError("relation is not transitive")
        sym = rel & rel.T
        np.fill_diagonal(sym, False)
        if sym.any():
            i, j = map(int, np.argwhere(sym)[0])
            raise ValidationError(
                f"cycle detected: {self.elements[i]!r} and {self.elements[j]!r} are mutually related"
            )
        rel = rel.copy()
        rel.flags.writeable = False
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "relation", rel)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _le(self) -> list[list[bool]]:
        return self.relation.tolist()

    def le(self, a: Hashable, b: Hashable) -> bool:
        return self._le[self.index[a]][self.index[b]]

    def lt(self, a: Hashable, b: Hashable) -> bool:
        return a != b and self.le(a, b)

    def comparable(self, a: Hashable, b: Hashable) -> bool:
        return self.le(a, b) or self.le(b, a)

    def is_chain(self, items: Sequence[Hashable]) -> bool:
        """True iff ``items`` are pairwise comparable and listed increasingly."""
        return all(self.lt(a, b) for a, b in zip(items, items[1:]))

    @cached_property
    def strict_pairs(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, j)`` with ``elements[i] < elements[j]``."""
        rel = self.relation
        return [(int(i), int(j)) for i, j in np.argwhere(rel) if i != j]

    @cached_property
    def cover_pairs(self) -> list[tuple[int, int]]:
        """Index pairs of the Hasse diagram."""
        rel = self.relation.copy()
        np.fill_diagonal(rel, False)
        through = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
        return [(int(i), int(j)) for i, j in np.argwhere(rel & ~through)]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item) -> bool:
        return item in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.relation, other.relation)

    __hash__ = None


def build_poset(elements: Iterable[Hashable], cover_relations: Iterable[tuple[Hashable, Hashable]] = ()) -> FinitePoset:
    """Reflexive-transitive closure of ``cover_relations`` on ``elements``.

    Elements keep their input order.  Raises :class:`ValidationError` for
    unknown labels or when the relations contain a cycle.
    """
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValidationError("duplicate poset elements")
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    for a, b in cover_relations:
        if a not in index or b not in index:
            missing = a if a not in index else b
            raise ValidationError(f"unknown element {missing!r} in cover relation")
        rel[index[a], index[b]] = True
    for k in range(n):
        rel |= rel[:, k, None] & rel[None, k, :]
    return FinitePoset(elements, rel)


def chain_poset(elements: Iterable[Hashable]) -> FinitePoset:
    """Total order on ``elements`` in the given order."""
    elements = tuple(elements)
    n = len(elements)
    return FinitePoset(elements, np.triu(np.ones((n, n), dtype=bool)))


def linear_extension(poset: FinitePoset) -> list:
    """Deterministic linear extension.

    Among the currently available minimal elements the one earliest in input
    order is taken next, so row-major input of a Young shape comes back in
    row-major reading order.
    """
    n = len(poset)
    below = [set() for _ in range(n)]
    for i, j in poset.strict_pairs:
        below[j].add(i)
    placed: set[int] = set()
    order = []
    while len(order) < n:
        for i in range(n):
            if i not in placed and below[i] <= placed:
                placed.add(i)
                order.append(poset.elements[i])
                break
    return order


@dataclass(frozen=True, eq=False)
class PosetTableauProblem:
    """Data generating the facet set ``T`` of a poset tableau complex.

    ``chains[x]`` lists the allowed values of ``x`` in increasing order (a
    chain of ``y_poset``); ``strict_pairs`` are pairs ``x1 < x2`` that must
    receive strictly increasing values; ``ambient`` optionally fixes the
    relation ``E`` (otherwise the union of the facets is used).
    """

    x_poset: FinitePoset
    y_poset: FinitePoset
    chains: Mapping[Hashable, tuple]
    strict_pairs: tuple = ()
    ambient: Mapping[Hashable, frozenset] | None = None

    def __post_init__(self):
        X, Y = self.x_poset, self.y_poset
        chains = {}
        for x in X.elements:
            if x not in self.chains:
                raise ValidationError(f"no value chain given for point {x!r}")
            chain = tuple(self.chains[x])
            for y in chain:
                if y not in Y:
                    raise ValidationError(f"chain value {y!r} of point {x!r} is not in the value poset")
            if not Y.is_chain(chain):
                raise ValidationError(f"values allowed at {x!r} are not an increasing chain: {chain!r}")
            chains[x] = chain
        extra = set(self.chains) - set(X.elements)
        if extra:
            raise ValidationError(f"chains given for unknown points {sorted(map(repr, extra))}")
        pairs = []
        for pair in self.strict_pairs:
            x1, x2 = pair
            if x1 not in X or x2 not in X:
                raise ValidationError(f"strict pair {pair!r} references unknown points")
            if not X.lt(x1, x2):
                raise ValidationError(f"strict pair {pair!r} is not of the form x1 < x2")
            pairs.append((x1, x2))
        ambient = None
        if self.ambient is not None:
            ambient = {}
            for x in X.elements:
                vals = frozenset(self.ambient.get(x, ()))
                if any(y not in Y for y in vals):
                    raise ValidationError(f"ambient values at {x!r} are not all in the value poset")
                ambient[x] = vals
            if set(self.ambient) - set(X.elements):
                raise ValidationError("ambient mentions unknown points")
        object.__setattr__(self, "chains", chains)
        object.__setattr__(self, "strict_pairs", tuple(dict.fromkeys(pairs)))
        object.__setattr__(self, "ambient", ambient)

    @property
    def points(self) -> tuple:
        return self.x_poset.elements

    def chain(self, x: Hashable) -> tuple:
        return self.chains[x]

    def with_chains(self, updates: Mapping[Hashable, Iterable], ambient=...) -> "PosetTableauProblem":
        """Copy with some value chains replaced (order taken from the old chain)."""
        chains = dict(self.chains)
        for x, keep in updates.items():
            keep = set(keep)
            chains[x] = tuple(y for y in chains[x] if y in keep)
        return PosetTableauProblem(
            self.x_poset,
            self.y_poset,
            chains,
            self.strict_pairs,
            self.ambient if ambient is ... else ambient,
        )

    def is_member(self, tableau: Tableau) -> bool:
        """Check the three defining conditions directly."""
        X, Y = self.x_poset, self.y_poset
        value = dict(zip(X.elements, tableau))
        if len(tableau) != len(X):
            return False
        if any(value[x] not in self.chains[x] for x in X.elements):
            return False
        for i, j in X.strict_pairs:
            if not Y.le(value[X.elements[i]], value[X.elements[j]]):
                return False
        return all(Y.lt(value[a], value[b]) for a, b in self.strict_pairs)


def enumerate_tableaux(problem: PosetTableauProblem, max_tableaux: int = DEFAULT_MAX_TABLEAUX) -> list[Tableau]:
    """All tableaux of ``problem`` in canonical order.

    Backtracks along the linear extension of ``X``, trying values in chain
    order, so the output is lexicographic in (linear-extension position,
    chain position).  Each tableau is a tuple aligned with ``X.elements``.
    """
    X, Y = problem.x_poset, problem.y_poset
    n = len(X)
    order = [X.index[x] for x in linear_extension(X)]
    strict = {(X.index[a], X.index[b]) for a, b in problem.strict_pairs}
    constraints: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for a, b in X.cover_pairs:
        constraints[b].append((a, (a, b) in strict))
    covers = set(X.cover_pairs)
    for a, b in sorted(strict - covers):
        constraints[b].append((a, True))
    candidates = [[Y.index[y] for y in problem.chains[x]] for x in X.elements]
    yle = Y._le
    values = [-1] * n
    out: list[tuple[int, ...]] = []

    def extend(k: int) -> None:
        if k == n:
            if len(out) >= max_tableaux:
                raise CapExceeded(f"more than {max_tableaux} tableaux")
            out.append(tuple(values))
            return
        i = order[k]
        checks = constraints[i]
        for v in candidates[i]:
            for a, is_strict in checks:
                u = values[a]
                if not yle[u][v] or (is_strict and u == v):
                    break
            else:
                values[i] = v
                extend(k + 1)
        values[i] = -1

    extend(0)
    ys = Y.elements
    return [tuple(ys[v] for v in tab) for tab in out]
