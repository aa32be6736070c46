"""Partitions, skew shapes, k-boundaries and the statistics of k-shapes.

Diagrams use French orientation: row 0 is the bottom row and rows are
left-justified.  A cell is addressed as ``Cell(row, col)``, both 0-based.
The hook length of a cell counts the cell itself, the cells to its right
in its row and the cells above it in its column.

Skew shapes are stored column by column as ``(height, bottom)`` pairs,
which is the natural representation for the column-lifting machinery in
:mod:`kshapes.partial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Sequence, Tuple

from .errors import DomainError, PreconditionError


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts, bottom row first."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or isinstance(p, bool) for p in parts):
            raise DomainError(f"parts must be integers: {parts!r}")
        if any(p <= 0 for p in parts):
            raise DomainError(f"parts must be positive: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts must be weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        out, r = [], len(self.parts)
        for c in range(self.parts[0]):
            while self.parts[r - 1] <= c:
                r -= 1
            out.append(r)
        return Partition(tuple(out))

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield Cell(r, c)

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 0 <= r < len(self.parts) and 0 <= c < self.parts[r]

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    @classmethod
    def from_json(cls, obj) -> "Partition":
        if isinstance(obj, dict):
            obj = obj["parts"]
        return cls(tuple(obj))


def hook_length(p: Partition, c: Cell) -> int:
    """Arm + leg + 1 of cell ``c`` inside the diagram of ``p``."""
    row, col = c
    if (row, col) not in p:
        raise DomainError(f"cell {tuple(c)} is not in {p}")
    conj = p.conjugate()
    return (p[row] - col - 1) + (conj[col] - row - 1) + 1


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram given by ``(height, bottom)`` for each column, left to right.

    Column ``c`` holds the cells at levels ``bottom .. bottom + height - 1``.
    A height of 0 marks a column of the ambient partition that carries no
    cell (this only happens for k-boundaries of non k-shapes).
    """

    columns: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        cols = tuple((int(h), int(b)) for h, b in self.columns)
        if any(h < 0 or b < 0 for h, b in cols):
            raise DomainError(f"negative height or bottom in {cols!r}")
        object.__setattr__(self, "columns", cols)

    def __len__(self):
        return len(self.columns)

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(h for h, _ in self.columns)

    @property
    def bottoms(self) -> Tuple[int, ...]:
        return tuple(b for _, b in self.columns)

    @property
    def tops(self) -> Tuple[int, ...]:
        """One past the highest level of each column."""
        return tuple(h + b for h, b in self.columns)

    @property
    def n_rows(self) -> int:
        return max(self.tops, default=0)

    def is_empty(self) -> bool:
        return all(h == 0 for h, _ in self.columns)

    def cells(self) -> Iterator[Cell]:
        for c, (h, b) in enumerate(self.columns):
            for r in range(b, b + h):
                yield Cell(r, c)

    def __contains__(self, cell) -> bool:
        r, c = cell
        if not 0 <= c < len(self.columns):
            return False
        h, b = self.columns[c]
        return b <= r < b + h

    def row_cells(self, r: int) -> List[int]:
        """Columns holding a cell at level ``r``."""
        return [c for c, (h, b) in enumerate(self.columns) if b <= r < b + h]

    @property
    def rs(self) -> Tuple[int, ...]:
        """Row lengths from bottom to top, zeros included."""
        counts = [0] * (self.n_rows + 1)
        for h, b in self.columns:
            counts[b] += 1
            counts[b + h] -= 1
        out, run = [], 0
        for d in counts[:-1]:
            run += d
            out.append(run)
        return tuple(out)

    @property
    def cs(self) -> Tuple[int, ...]:
        """Column heights from left to right, zeros included."""
        return self.heights

    def hook(self, row: int, col: int) -> int:
        if (row, col) not in self:
            raise DomainError(f"cell {(row, col)} is not in the skew shape")
        h, b = self.columns[col]
        right = sum(1 for c2 in range(col + 1, len(self.columns))
                    if self.columns[c2][1] <= row < sum(self.columns[c2]))
        return right + (b + h - row)

    def has_continuous_rim(self) -> bool:
        """Whether the lower border is a single connected lattice path."""
        cols = self.columns
        if not cols:
            return True
        if any(h == 0 for h, _ in cols) or cols[-1][1] != 0:
            return False
        return all(cols[c][1] <= cols[c + 1][0] + cols[c + 1][1] for c in range(len(cols) - 1))

    def rim(self) -> List[Tuple[str, int, int]]:
        """Lower border as unit steps ``(kind, x, y)`` from top-left to bottom-right.

        ``kind`` is ``"H"`` for a horizontal step under the cell at column
        ``x`` and level ``y``, ``"V"`` for a vertical step on the line
        ``x`` from level ``y + 1`` down to ``y``.
        """
        steps = []
        cols = [(h, b) for h, b in self.columns]
        for c, (h, b) in enumerate(cols):
            if h == 0:
                continue
            if steps:
                prev = steps[-1][2]
                for y in range(prev - 1, b - 1, -1):
                    steps.append(("V", c, y))
            else:
                for y in range(b + h - 1, b - 1, -1):
                    steps.append(("V", c, y))
            steps.append(("H", c, b))
        return steps

    def to_json(self) -> dict:
        return {"columns": [{"h": h, "b": b} for h, b in self.columns]}


@lru_cache(maxsize=1 << 16)
def k_boundary(p: Partition, k: int) -> SkewShape:
    """The cells of ``p`` whose hook length is at most ``k``."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    conj = p.conjugate()
    cols = []
    for c, height in enumerate(conj.parts):
        # hooks strictly decrease going up a column
        r = 0
        while r < height and (p[r] - c - 1) + (height - r - 1) + 1 > k:
            r += 1
        cols.append((height - r, r))
    return SkewShape(tuple(cols))


def canonical_partition(s: SkewShape) -> Partition:
    """Fill the region below and left of ``s``; needs a continuous lower border."""
    if not s.has_continuous_rim():
        raise PreconditionError("the lower border of the skew shape is fragmented")
    return Partition(tuple(s.tops)).conjugate() if s.columns else Partition()


@lru_cache(maxsize=1 << 16)
def is_k_shape(p: Partition, k: int) -> bool:
    s = k_boundary(p, k)
    rs, cs = s.rs, s.cs
    return (all(rs[i] >= rs[i + 1] for i in range(len(rs) - 1))
            and all(cs[i] >= cs[i + 1] for i in range(len(cs) - 1))
            and all(rs) and all(cs))


@dataclass(frozen=True)
class CellClass:
    cells: FrozenSet[Cell] = frozenset()
    steps: int = 0


_EMPTY_CLASS = CellClass()


class CellClasses(Dict[Tuple[int, int], CellClass]):
    """``(u, v) -> CellClass``; absent keys read as the empty class."""

    def __missing__(self, key):
        return _EMPTY_CLASS


def _require_k_shape(p: Partition, k: int) -> SkewShape:
    if not is_k_shape(p, k):
        raise PreconditionError(f"{p} is not a {k}-shape")
    return k_boundary(p, k)


def _classes_of(s: SkewShape) -> CellClasses:
    rs = s.rs
    cells: Dict[Tuple[int, int], set] = {}
    steps: Dict[Tuple[int, int], int] = {}
    for c, (h, b) in enumerate(s.columns):
        for r in range(b, b + h):
            cells.setdefault((rs[r], h), set()).add(Cell(r, c))
        # the rim step under this column sits below its bottom cell
        key = (rs[b], h)
        steps[key] = steps.get(key, 0) + 1
    return CellClasses({key: CellClass(frozenset(v), steps.get(key, 0)) for key, v in cells.items()})


def cell_classes(p: Partition, k: int) -> CellClasses:
    """Cells of the k-boundary grouped by (row length, column height)."""
    return CellClasses(_cell_classes(p, k))


@lru_cache(maxsize=1 << 16)
def _cell_classes(p: Partition, k: int) -> CellClasses:
    return _classes_of(_require_k_shape(p, k))


def _is_irreducible_classes(classes: CellClasses, k: int) -> bool:
    return all(classes[(i, k - i)].steps <= i - 1 and classes[(i, k + 1 - i)].steps <= i - 1
               for i in range(1, k + 1))


def is_irreducible(p: Partition, k: int) -> bool:
    return _is_irreducible_classes(_cell_classes(p, k), k)


@dataclass(frozen=True)
class ShapeStats:
    k: int
    fr_vector: Tuple[int, ...]
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    z: Tuple[int, ...]

    @property
    def fr(self) -> int:
        return sum(self.fr_vector)

    def to_json(self) -> dict:
        return {"k": self.k, "fr_vector": list(self.fr_vector), "x": list(self.x),
                "y": list(self.y), "z": list(self.z)}


@lru_cache(maxsize=1 << 16)
def shape_stats(p: Partition, k: int) -> ShapeStats:
    """Free-site vector and the x/y/z step counts of an irreducible k-shape.

    ``x[i-1]`` counts rim steps in H_{k-i} ∩ V_{i+1}; ``y[i-1]`` counts
    steps in the classes (u, i) with u <= k - i; ``z`` interleaves them as
    (y_1, x_1, y_2, x_2, ...).
    """
    if k < 3:
        raise DomainError(f"shape statistics need k >= 3, got {k}")
    classes = _cell_classes(p, k)
    if not _is_irreducible_classes(classes, k):
        raise PreconditionError(f"{p} is not an irreducible {k}-shape")
    x = tuple(classes[(k - i, i + 1)].steps for i in range(1, k - 1))
    y = tuple(sum(classes[(u, i)].steps for u in range(1, k - i + 1)) for i in range(1, k - 1))
    fr = tuple(int(not classes[(k - i, i + 1)].cells) for i in range(1, k - 1))
    assert fr == tuple(int(v == 0) for v in x), "free sites disagree with x statistic"
    z = tuple(v for pair in zip(y, x) for v in pair)
    return ShapeStats(k, fr, x, y, z)


def render_partition(p: Partition) -> str:
    """Ferrers diagram with every cell showing its hook length, top row first."""
    if not p.parts:
        return "(empty)"
    conj = p.conjugate()
    hooks = [[(p[r] - c - 1) + (conj[c] - r - 1) + 1 for c in range(p[r])] for r in range(len(p))]
    width = len(str(max(max(row) for row in hooks)))
    return "\n".join("".join(f"[{h:>{width}}]" for h in row) for row in reversed(hooks))


def render_skew(s: SkewShape, labels: Sequence[int] = None) -> str:
    """Skew diagram, top row first; ``#`` for label 1, ``o`` for label 2, ``.`` otherwise."""
    if s.is_empty():
        return "(empty)"
    lines = []
    for r in reversed(range(s.n_rows)):
        row = []
        for c, (h, b) in enumerate(s.columns):
            if b <= r < b + h:
                row.append({1: "#", 2: "o"}.get(labels[c], ".") if labels else "#")
            else:
                row.append(" ")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
