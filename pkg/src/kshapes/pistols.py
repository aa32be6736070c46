"""Surjective pistols and their point statistics.

A surjective pistol of height ``n`` is a map f: {1..2n} -> {2, 4, .., 2n}
with f(j) >= j that hits every even value.  Values are stored as a tuple
``(f(1), .., f(2n))``; positions in this module are 1-based to match the
usual way these maps are written down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .errors import DomainError, PistolError


@dataclass(frozen=True)
class Pistol:
    values: Tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.values) // 2

    def __call__(self, j: int) -> int:
        return self.values[j - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __lt__(self, other):
        return self.values < other.values

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"

    def fix_vector(self) -> Tuple[int, ...]:
        """``t_i = 1`` iff f(2i) = 2i, for i in 1..height-1."""
        return tuple(int(self(2 * i) == 2 * i) for i in range(1, self.height))

    def to_json(self) -> dict:
        return {"height": self.height, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj) -> "Pistol":
        if isinstance(obj, dict):
            pistol = validate(obj["values"])
            if "height" in obj and obj["height"] != pistol.height:
                raise PistolError("length", f"height {obj['height']} does not match {len(pistol)} values")
            return pistol
        return validate(obj)


def validate(values: Sequence[int]) -> Pistol:
    """Check every defining clause and return the pistol, or raise :class:`PistolError`."""
    values = tuple(values)
    if not values or len(values) % 2:
        raise PistolError("length", f"a pistol has an even, positive number of values, got {len(values)}")
    n = len(values) // 2
    for j, v in enumerate(values, 1):
        if not isinstance(v, int) or isinstance(v, bool) or v % 2:
            raise PistolError("parity", f"f({j}) = {v!r} is not an even integer")
    for j, v in enumerate(values, 1):
        if not 2 <= v <= 2 * n:
            raise PistolError("codomain", f"f({j}) = {v} is outside {{2,...,{2 * n}}}")
    for j, v in enumerate(values, 1):
        if v < j:
            raise PistolError("bound", f"f({j}) = {v} is smaller than {j}")
    missing = sorted(set(range(2, 2 * n + 1, 2)) - set(values))
    if missing:
        raise PistolError("surjectivity", f"value {missing[0]} has no preimage")
    return Pistol(values)


def enumerate_pistols(n: int) -> Iterator[Pistol]:
    """Every surjective pistol of height ``n``, in lexicographic order of values."""
    if n < 1:
        raise DomainError(f"height must be positive, got {n}")
    size = 2 * n
    vals = [0] * size
    # covered[i] counts positions mapped to 2i (index 0 unused)
    covered = [0] * (n + 1)

    def feasible(j):
        # positions j+1..size are free and a missing value 2i can only be hit from
        # a free position <= 2i; Hall's condition over the prefixes 2, 4, .., 2i
        need = 0
        for i in range(1, n + 1):
            if not covered[i]:
                need += 1
                if need > 2 * i - j:
                    return False
        return True

    def rec(j):
        # j is the 0-based position being filled, i.e. f(j + 1)
        if j == size:
            yield Pistol(tuple(vals))
            return
        for v in range((j + 2) // 2 * 2, size + 1, 2):
            i = v // 2
            vals[j] = v
            covered[i] += 1
            if feasible(j + 1):
                yield from rec(j + 1)
            covered[i] -= 1

    yield from rec(0)


def count_pistols(n: int) -> int:
    return sum(1 for _ in enumerate_pistols(n))


@dataclass(frozen=True)
class PointStats:
    fix: int
    max: int
    pro: int
    sur: int
    mo: int
    me: int
    fl: int
    fnl: int
    sl: int
    snl: int
    fix_vector: Tuple[int, ...]

    def to_json(self) -> dict:
        d = {name: getattr(self, name) for name in
             ("fix", "max", "pro", "sur", "mo", "me", "fl", "fnl", "sl", "snl")}
        d["fix_vector"] = list(self.fix_vector)
        return d


PRO_VARIANTS = ("default", "literal", "first-excluded", "max-and-first-excluded")


def prominent_points(f: Pistol, variant: str = "default") -> Tuple[int, ...]:
    """Positions j <= 2n-2 where f(j) is a strict running maximum.

    ``default`` admits j = 1 and excludes maximal points (f(j) = 2n); the
    other variants toggle those two choices.
    """
    if variant not in PRO_VARIANTS:
        raise DomainError(f"unknown prominent-point variant {variant!r}")
    top = 2 * f.height
    exclude_max = variant in ("default", "max-and-first-excluded")
    exclude_first = variant in ("first-excluded", "max-and-first-excluded")
    points = []
    running = 0
    for j in range(1, top - 1):
        v = f(j)
        if v > running and not (exclude_max and v == top) and not (exclude_first and j == 1):
            points.append(j)
        running = max(running, v)
    return tuple(points)


def point_stats(f: Pistol, pro_variant: str = "default") -> PointStats:
    """All point statistics over positions 1..2n-2."""
    n = f.height
    top = 2 * n
    domain = range(1, top - 1)
    counts = {}
    for j in domain:
        counts[f(j)] = counts.get(f(j), 0) + 1
    maximal = [j for j in domain if f(j) == top]
    fixed = [j for j in domain if f(j) == j]
    surfixed = [j for j in domain if f(j) == j + 1]
    fl = sum(1 for j in fixed if counts[f(j)] > 1)
    sl = sum(1 for j in surfixed if counts[f(j)] > 1)
    mo = sum(1 for j in maximal if j % 2)
    return PointStats(
        fix=len(fixed),
        max=len(maximal),
        pro=len(prominent_points(f, pro_variant)),
        sur=len(surfixed),
        mo=mo,
        me=len(maximal) - mo,
        fl=fl,
        fnl=len(fixed) - fl,
        sl=sl,
        snl=len(surfixed) - sl,
        fix_vector=f.fix_vector(),
    )


def render_pistol(f: Pistol) -> str:
    """Staircase tableau with rows of length 2, 4, .., 2n, top row first.

    Row i holds positions 1..2i and the dot of position j sits in row
    f(j)/2.  Positions run right to left so the rows come out
    right-justified; the last line lists the positions.
    """
    n = f.height
    width = len(str(2 * n))
    lines = []
    for i in range(1, n + 1):
        cells = []
        for j in range(2 * n, 0, -1):
            if j > 2 * i:
                cells.append(" " * (width + 2))
            else:
                cells.append("[" + ("*" if f(j) == 2 * i else " ").center(width) + "]")
        lines.append("".join(cells))
    lines.append("".join(f" {j:>{width}} " for j in range(2 * n, 0, -1)))
    return "\n".join(line.rstrip() for line in lines)
