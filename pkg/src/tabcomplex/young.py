"""Young diagrams, flaggings and set-valued Young tableaux.

Boxes are ``(row, column)`` pairs, both 1-based, listed in row-major order.
Entries are positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .complexes import TableauComplex, complex_from_problem
from .errors import CapExceeded, ValidationError
from .poset import DEFAULT_MAX_TABLEAUX, PosetTableauProblem, build_poset, chain_poset

__all__ = [
    "Partition",
    "SkewShape",
    "YoungSVT",
    "as_shape",
    "normalize_flags",
    "shape_to_problem",
    "young_complex",
    "is_buch_semistandard",
    "is_limit_semistandard",
    "enumerate_svt",
    "empty_face_tableau",
    "render_tableau",
]

Box = tuple  # (row, column)


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValidationError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def row_range(self, r: int) -> range:
        return range(1, self.parts[r - 1] + 1)

    def boxes(self) -> list[Box]:
        return [(r, c) for r in range(1, self.rows + 1) for c in self.row_range(r)]

    def contains(self, other: "Partition") -> bool:
        return other.rows <= self.rows and all(a <= b for a, b in zip(other.parts, self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer, inner = Partition(tuple(getattr(self.outer, "parts", self.outer))), Partition(
            tuple(getattr(self.inner, "parts", self.inner))
        )
        if not outer.contains(inner):
            raise ValidationError(f"inner shape {inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def rows(self) -> int:
        return self.outer.rows

    def row_range(self, r: int) -> range:
        start = self.inner.parts[r - 1] if r <= self.inner.rows else 0
        return range(start + 1, self.outer.parts[r - 1] + 1)

    def boxes(self) -> list[Box]:
        return [(r, c) for r in range(1, self.rows + 1) for c in self.row_range(r)]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


Shape = Partition | SkewShape


def as_shape(shape: Shape | Sequence[int]) -> Shape:
    if isinstance(shape, (Partition, SkewShape)):
        return shape
    return Partition(tuple(shape))


def normalize_flags(shape: Shape, bound: int | Sequence[int]) -> tuple[int, ...]:
    """One upper bound per row of the shape."""
    if isinstance(bound, int):
        flags = (bound,) * shape.rows
    else:
        flags = tuple(int(n) for n in bound)
        if len(flags) < shape.rows:
            raise ValidationError(f"flagging {flags} is shorter than the {shape.rows} rows of {shape}")
        if len(flags) > shape.rows:
            raise ValidationError(f"flagging {flags} is longer than the {shape.rows} rows of {shape}")
    if any(n <= 0 for n in flags):
        raise ValidationError(f"flag bounds must be positive: {flags}")
    return flags


def shape_to_problem(shape: Shape | Sequence[int], bound: int | Sequence[int]) -> PosetTableauProblem:
    """Poset problem whose tableaux are the flagged semistandard fillings.

    Boxes are ordered componentwise; a box in row ``r`` may take values
    ``1..n_r``; vertically adjacent boxes must increase strictly.
    """
    shape = as_shape(shape)
    flags = normalize_flags(shape, bound)
    boxes = shape.boxes()
    if not boxes:
        raise ValidationError("the shape has no boxes")
    present = set(boxes)
    right = [((r, c), (r, c + 1)) for r, c in boxes if (r, c + 1) in present]
    down = [((r, c), (r + 1, c)) for r, c in boxes if (r + 1, c) in present]
    X = build_poset(boxes, right + down)
    Y = chain_poset(range(1, max(flags) + 1))
    chains = {(r, c): tuple(range(1, flags[r - 1] + 1)) for r, c in boxes}
    return PosetTableauProblem(X, Y, chains, tuple(down))


def young_complex(
    shape: Shape | Sequence[int], bound: int | Sequence[int], max_tableaux: int = DEFAULT_MAX_TABLEAUX
) -> TableauComplex:
    return complex_from_problem(shape_to_problem(shape, bound), max_tableaux)


@dataclass(frozen=True)
class YoungSVT:
    """Set-valued filling of a shape: ``entries[k]`` is the set in ``shape.boxes()[k]``."""

    shape: Shape
    entries: tuple

    def __post_init__(self):
        shape = as_shape(self.shape)
        entries = tuple(frozenset(int(v) for v in s) for s in self.entries)
        if len(entries) != len(shape.boxes()):
            raise ValidationError(f"expected {len(shape.boxes())} boxes, got {len(entries)}")
        for s in entries:
            if not s:
                raise ValidationError("boxes of a set-valued tableau must be nonempty")
            if min(s) < 1:
                raise ValidationError("tableau entries must be positive")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Iterable[int] | int]], inner: Sequence[int] = ()) -> "YoungSVT":
        """Build from rows of boxes; a bare integer stands for a singleton."""
        outer = Partition(tuple(len(row) + (inner[i] if i < len(inner) else 0) for i, row in enumerate(rows)))
        shape: Shape = SkewShape(outer, Partition(tuple(inner))) if any(inner) else outer
        entries = [frozenset((v,)) if isinstance(v, int) else frozenset(v) for row in rows for v in row]
        return cls(shape, tuple(entries))

    @classmethod
    def from_face(cls, shape: Shape, face: Sequence[Iterable[int]]) -> "YoungSVT":
        return cls(shape, tuple(face))

    def as_dict(self) -> dict[Box, frozenset]:
        return dict(zip(self.shape.boxes(), self.entries))

    @property
    def size(self) -> int:
        return sum(len(s) for s in self.entries)

    def contained_tableaux(self) -> Iterator[tuple[int, ...]]:
        import itertools

        yield from itertools.product(*(sorted(s) for s in self.entries))

    def render(self) -> str:
        return render_tableau(self.shape, self.entries)

    def __str__(self) -> str:
        return self.render()


def render_tableau(shape: Shape, entries: Sequence[Iterable[int] | int], compact: bool = False) -> str:
    """Text picture of a (set-valued) filling.

    The default form brackets every box, ``[1 2][2] / [3]``.  With
    ``compact=True`` single-valued fillings with one-digit entries print as
    ``12/3``.  Skipped boxes of a skew shape show as ``.``.
    """
    shape = as_shape(shape)
    cells = [sorted(e) if not isinstance(e, int) else [e] for e in entries]
    at = dict(zip(shape.boxes(), cells))
    small = compact and all(len(c) == 1 and c[0] < 10 for c in cells)
    rows = []
    for r in range(1, shape.rows + 1):
        span = shape.row_range(r)
        lead = span.start - 1
        if small:
            rows.append("." * lead + "".join(str(at[(r, c)][0]) for c in span))
        else:
            rows.append("[.]" * lead + "".join("[" + " ".join(map(str, at[(r, c)])) + "]" for c in span))
    return "/".join(rows) if small else " / ".join(rows)


def _neighbours(shape: Shape) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    index = {b: k for k, b in enumerate(shape.boxes())}
    right = [(k, index[(r, c + 1)]) for (r, c), k in index.items() if (r, c + 1) in index]
    down = [(k, index[(r + 1, c)]) for (r, c), k in index.items() if (r + 1, c) in index]
    return right, down


def _within_flags(tau: YoungSVT, flags: Sequence[int] | None) -> bool:
    if flags is None:
        return True
    flags = normalize_flags(tau.shape, flags)
    return all(max(s) <= flags[r - 1] for (r, _), s in zip(tau.shape.boxes(), tau.entries))


def is_buch_semistandard(tau: YoungSVT, flags: int | Sequence[int] | None = None) -> bool:
    """Rows weakly increase and columns strictly increase, comparing whole sets."""
    e = tau.entries
    right, down = _neighbours(tau.shape)
    if any(max(e[a]) > min(e[b]) for a, b in right):
        return False
    if any(max(e[a]) >= min(e[b]) for a, b in down):
        return False
    return _within_flags(tau, flags)


def is_limit_semistandard(tau: YoungSVT, flags: int | Sequence[int] | None = None) -> bool:
    """Whether some single-valued tableau inside ``tau`` is semistandard (and flagged)."""
    shape = tau.shape
    boxes = shape.boxes()
    bounds = normalize_flags(shape, flags) if flags is not None else None
    right, down = _neighbours(shape)
    preds: list[list[tuple[int, bool]]] = [[] for _ in boxes]
    for a, b in right:
        preds[b].append((a, False))
    for a, b in down:
        preds[b].append((a, True))
    choice = [0] * len(boxes)

    def rec(k: int) -> bool:
        if k == len(boxes):
            return True
        cap = bounds[boxes[k][0] - 1] if bounds else None
        for v in sorted(tau.entries[k]):
            if cap is not None and v > cap:
                break
            if all(choice[a] < v if strict else choice[a] <= v for a, strict in preds[k]):
                choice[k] = v
                if rec(k + 1):
                    return True
        return False

    return rec(0)


def enumerate_svt(
    shape: Shape | Sequence[int], bound: int | Sequence[int], max_count: int = DEFAULT_MAX_TABLEAUX
) -> list[YoungSVT]:
    """All flagged semistandard set-valued tableaux, by direct backtracking.

    Boxes are filled in row-major order.  A box's set must start above the
    maxima of its left neighbour (weakly) and upper neighbour (strictly);
    its maximum is capped by the row's flag.
    """
    shape = as_shape(shape)
    flags = normalize_flags(shape, bound)
    boxes = shape.boxes()
    index = {b: k for k, b in enumerate(boxes)}
    left = [index.get((r, c - 1)) for r, c in boxes]
    up = [index.get((r - 1, c)) for r, c in boxes]
    cells: list[frozenset] = [frozenset()] * len(boxes)
    out: list[YoungSVT] = []

    def subsets(lo: int, hi: int) -> Iterator[frozenset]:
        # nonempty subsets of lo..hi, ordered by minimum then lexicographically
        for m in range(lo, hi + 1):
            rest = list(range(m + 1, hi + 1))
            for mask in range(1 << len(rest)):
                yield frozenset([m] + [rest[i] for i in range(len(rest)) if mask >> i & 1])

    def rec(k: int) -> None:
        if k == len(boxes):
            if len(out) >= max_count:
                raise CapExceeded(f"more than {max_count} set-valued tableaux")
            out.append(YoungSVT(shape, tuple(cells)))
            return
        lo = 1
        if left[k] is not None:
            lo = max(lo, max(cells[left[k]]))
        if up[k] is not None:
            lo = max(lo, max(cells[up[k]]) + 1)
        for s in subsets(lo, flags[boxes[k][0] - 1]):
            cells[k] = s
            rec(k + 1)
        cells[k] = frozenset()

    rec(0)
    return out


def empty_face_tableau(shape: Shape | Sequence[int], bound: int | Sequence[int]) -> YoungSVT:
    """Boxwise union of all flagged semistandard tableaux.

    Each box's union is checked to be an integer interval; for straight
    shapes its minimum must equal the box's row index.
    """
    shape = as_shape(shape)
    try:
        cx = young_complex(shape, bound)
    except ValidationError as err:
        if "no tableaux" in str(err):
            raise ValidationError(f"no semistandard tableaux of shape {shape} for flagging {bound}") from err
        raise
    tau = YoungSVT(shape, cx.union_of_facets)
    for (r, c), s in zip(shape.boxes(), tau.entries):
        if max(s) - min(s) + 1 != len(s):
            raise ValidationError(f"values at box {(r, c)} do not form an interval: {sorted(s)}")
        if isinstance(shape, Partition) and min(s) != r:
            raise ValidationError(f"smallest value at box {(r, c)} is {min(s)}, expected {r}")
    return tau


def face_as_svt(cx: TableauComplex, shape: Shape, face) -> YoungSVT:
    """Read a face of a Young complex as a set-valued tableau."""
    if isinstance(face, Mapping):
        face = [face[b] for b in cx.points]
    return YoungSVT(shape, tuple(face))
