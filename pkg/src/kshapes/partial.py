"""Partial k-shapes: labeled skew shapes and the rectangle sum.

A partial k-shape is a skew shape whose columns carry a label 1 or 2.
Column heights decrease weakly to the right, and every cell has hook at
most k (label 1) or k - 1 (label 2).  ``oplus`` glues a rectangle on the
right and then lifts columns until none of the three lifting rules
applies:

1. a column whose bottom cell is a corner with hook above its label bound
   moves up one level;
2. a label-1 column of height 2..k-1 rooted right next to a column of a
   different height or label lifts every column on its left rooted in the
   same row;
3. a column whose bottom cell had hook exactly k before the sum, and now
   is a corner with a smaller hook, pulls up the columns that follow the
   end of its row until that hook is k again.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .errors import DomainError, InvariantViolation, PreconditionError
from .partition import SkewShape, render_skew

MAX_LIFTS = 100_000

# rule scan orders; the first is the canonical one and "rtl-123-restart" is
# the same schedule run through the generic loop (restart after every lift)
ORDERS = ("rtl-123", "rtl-123-restart", "ltr-123", "rtl-321", "rule-major")


def ceil_half(n: int) -> int:
    return -(-n // 2)


def label_of(j: int) -> int:
    """Label of the columns glued at step j: 1 for even j, 2 for odd j."""
    return 1 if j % 2 == 0 else 2


@dataclass(frozen=True)
class PartialKShape:
    k: int
    columns: Tuple[Tuple[int, int, int], ...] = ()  # (height, bottom, label)

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(c) for c in self.columns))

    def __len__(self):
        return len(self.columns)

    @property
    def heights(self):
        return tuple(c[0] for c in self.columns)

    @property
    def labels(self):
        return tuple(c[2] for c in self.columns)

    def is_empty(self) -> bool:
        return not self.columns

    def skew(self) -> SkewShape:
        return SkewShape(tuple((h, b) for h, b, _ in self.columns))

    def check(self) -> None:
        """Raise :class:`InvariantViolation` unless this is a valid partial k-shape."""
        cols = self.columns
        if any(lab not in (1, 2) or h < 1 or b < 0 for h, b, lab in cols):
            raise InvariantViolation(f"bad column in {cols}")
        for c in range(len(cols) - 1):
            (h1, b1, _), (h2, b2, _) = cols[c], cols[c + 1]
            if h1 < h2 or b1 < b2 or b1 + h1 < b2 + h2:
                raise InvariantViolation(f"columns {c} and {c + 1} break monotonicity in {cols}")
        for c, (h, b, lab) in enumerate(cols):
            if _hook(cols, c) > (self.k if lab == 1 else self.k - 1):
                raise InvariantViolation(f"column {c} exceeds its hook bound in {cols}")

    def saturated_columns(self) -> FrozenSet[int]:
        """Label-1 columns rooted in a row whose leftmost cell has hook k."""
        return _saturated_columns(self.k, self.columns)

    def unsaturated_indices(self) -> Tuple[int, ...]:
        """The i in 1..k-2 in which this shape is not saturated."""
        return _unsaturated_indices(self.k, self.columns)

    def to_json(self) -> dict:
        return {"k": self.k, "columns": [{"h": h, "b": b, "label": lab} for h, b, lab in self.columns]}

    @classmethod
    def from_json(cls, obj) -> "PartialKShape":
        return cls(obj["k"], tuple((c["h"], c["b"], c["label"]) for c in obj["columns"]))

    def render(self) -> str:
        return render_skew(self.skew(), self.labels)


@lru_cache(maxsize=1 << 16)
def _saturated_columns(k, cols) -> FrozenSet[int]:
    out = set()
    for c, (h, b, lab) in enumerate(cols):
        if lab != 1:
            continue
        lead = c
        while lead > 0 and cols[lead - 1][1] == b:
            lead -= 1
        if _hook(cols, lead) == k:
            out.add(c)
    return frozenset(out)


@lru_cache(maxsize=1 << 16)
def _unsaturated_indices(k, cols) -> Tuple[int, ...]:
    s = PartialKShape(k, cols)
    return tuple(i for i in range(1, k - 1) if not is_saturated_in(s, i))


def _hook(cols, c) -> int:
    """Hook of the bottom cell of column c (columns are monotone)."""
    h, r, _ = cols[c]
    n = h
    for c2 in range(c + 1, len(cols)):
        h2, b2, _ = cols[c2]
        if b2 <= r < b2 + h2:
            n += 1
        elif b2 + h2 <= r:
            break
    return n


def is_saturated_in(s: PartialKShape, i: int) -> bool:
    """Every label-1 column of height i + 1 is saturated (vacuous if none)."""
    if not 1 <= i <= s.k - 1:
        raise DomainError(f"saturation index must lie in 1..{s.k - 1}, got {i}")
    return _saturated_in(s.k, s.columns, i)


@lru_cache(maxsize=1 << 17)
def _saturated_in(k, cols, i) -> bool:
    sat = None
    for c, (h, _, lab) in enumerate(cols):
        if lab == 1 and h == i + 1:
            if sat is None:
                sat = _saturated_columns(k, cols)
            if c not in sat:
                return False
    return True


class _Rewriter:
    """Mutable working copy used while normalizing a glued shape."""

    def __init__(self, k, cols, protected):
        self.k = k
        self.h = [c[0] for c in cols]
        self.b = [c[1] for c in cols]
        self.lab = [c[2] for c in cols]
        self.protected = protected
        self.lifts = 0
        self.touched = -1

    def top(self, c):
        return self.b[c] + self.h[c]

    def hook(self, c):
        b, h = self.b, self.h
        r = b[c]
        n = h[c]
        for c2 in range(c + 1, len(b)):
            if b[c2] <= r < b[c2] + h[c2]:
                n += 1
            elif b[c2] + h[c2] <= r:
                break
        return n

    def corner(self, c):
        return c == 0 or not (self.b[c - 1] <= self.b[c] < self.top(c - 1))

    def lift(self, cs):
        for c in cs:
            self.b[c] += 1
        self.lifts += 1
        self.touched = max(cs)
        if self.lifts > MAX_LIFTS:
            raise InvariantViolation("lifting rules did not terminate")

    def rule1(self, c):
        bound = self.k if self.lab[c] == 1 else self.k - 1
        if self.corner(c) and self.hook(c) > bound:
            self.lift((c,))
            return True
        return False

    def rule2(self, c):
        if self.lab[c] != 1 or not 2 <= self.h[c] <= self.k - 1 or c == 0:
            return False
        b = self.b
        if b[c - 1] != b[c] or (self.h[c - 1] == self.h[c] and self.lab[c - 1] == 1):
            return False
        group = [c2 for c2 in range(c - 1, -1, -1) if b[c2] == b[c]]
        self.lift(group)
        return True

    def rule3(self, c):
        if c not in self.protected or not self.corner(c) or self.hook(c) >= self.k:
            return False
        r = self.b[c]
        e = c
        while e + 1 < len(self.b) and self.b[e + 1] <= r < self.top(e + 1):
            e += 1
        d = e + 1
        if d == len(self.b):
            raise InvariantViolation(f"rule (3): nothing left to restore the row of column {c}")
        group = [d] + [c2 for c2 in range(d - 1, -1, -1) if self.b[c2] == self.b[d]]
        self.lift(group)
        return True

    def _run_canonical(self):
        """rtl-123 with the rule bodies inlined; same result as the generic scan."""
        k, h, b, lab, protected = self.k, self.h, self.b, self.lab, self.protected
        n = len(b)
        c = n - 1
        lifts = 0
        while c >= 0:
            r = b[c]
            corner = c == 0 or not (b[c - 1] <= r < b[c - 1] + h[c - 1])
            hook = None
            if corner:
                hook = h[c]
                for c2 in range(c + 1, n):
                    b2 = b[c2]
                    if b2 <= r < b2 + h[c2]:
                        hook += 1
                    elif b2 + h[c2] <= r:
                        break
                # rule 1
                if hook > (k if lab[c] == 1 else k - 1):
                    b[c] += 1
                    lifts += 1
                    if lifts > MAX_LIFTS:
                        raise InvariantViolation("lifting rules did not terminate")
                    c = min(n - 1, c + 1)
                    continue
            # rule 2
            if (c > 0 and lab[c] == 1 and 2 <= h[c] <= k - 1 and b[c - 1] == r
                    and not (h[c - 1] == h[c] and lab[c - 1] == 1)):
                for c2 in range(c - 1, -1, -1):
                    if b[c2] == r:
                        b[c2] += 1
                lifts += 1
                if lifts > MAX_LIFTS:
                    raise InvariantViolation("lifting rules did not terminate")
                # columns up to c-1 moved, so column c is rechecked
                continue
            # rule 3
            if corner and c in protected and hook < k:
                e = c
                while e + 1 < n and b[e + 1] <= r < b[e + 1] + h[e + 1]:
                    e += 1
                d = e + 1
                if d == n:
                    raise InvariantViolation(f"rule (3): nothing left to restore the row of column {c}")
                bd = b[d]
                for c2 in range(d, -1, -1):
                    if b[c2] == bd:
                        b[c2] += 1
                lifts += 1
                if lifts > MAX_LIFTS:
                    raise InvariantViolation("lifting rules did not terminate")
                c = min(n - 1, d + 1)
                continue
            c -= 1
        self.lifts = lifts

    def run(self, order="rtl-123"):
        if order == "rtl-123":
            self._run_canonical()
            return
        n = len(self.b)
        rules = (self.rule1, self.rule2, self.rule3)
        if order == "rtl-321":
            # whether a rule fires at column x depends only on columns x-1, x, ..
            # so after a lift touching columns <= M the scan can resume at M+1
            rules = rules[::-1]
            c = n - 1
            while c >= 0:
                if any(rule(c) for rule in rules):
                    c = min(n - 1, max(c, self.touched + 1))
                else:
                    c -= 1
            return
        if order == "rtl-123-restart":
            sweep = [(c, r) for c in range(n - 1, -1, -1) for r in rules]
        elif order == "ltr-123":
            sweep = [(c, r) for c in range(n) for r in rules]
        elif order == "rule-major":
            sweep = [(c, r) for r in rules for c in range(n - 1, -1, -1)]
        else:
            raise DomainError(f"unknown rule order {order!r}")
        while any(rule(c) for c, rule in sweep):
            pass

    def result(self):
        return tuple(zip(self.h, self.b, self.lab))


def oplus(s: PartialKShape, j: int, z: int, order: str = "rtl-123") -> PartialKShape:
    """Glue z columns of height ceil((j+1)/2) and label t(j), then normalize."""
    if j < 1:
        raise DomainError(f"j must be positive, got {j}")
    if z < 0:
        raise DomainError(f"z must be non-negative, got {z}")
    if s.columns and min(s.heights) < ceil_half(j + 2):
        raise PreconditionError(f"every column must have height >= {ceil_half(j + 2)} to add at step {j}")
    if z == 0:
        return s
    if order not in ORDERS:
        raise DomainError(f"unknown rule order {order!r}")
    return PartialKShape(s.k, _normalized_sum(s.k, s.columns, j, z, order))


@lru_cache(maxsize=1 << 17)
def _normalized_sum(k, cols, j, z, order):
    protected = frozenset(c for c, (_, _, lab) in enumerate(cols) if lab == 1 and _hook(cols, c) == k)
    base = cols[-1][1] if cols else 0
    glued = cols + ((ceil_half(j + 1), base, label_of(j)),) * z
    w = _Rewriter(k, glued, protected)
    w.run(order)
    return w.result()


def saturating_z(s: PartialKShape, j: int, i: int, unique: bool = True) -> int:
    """The unique z in 1..k-1-ceil(j/2) making ``oplus(s, j, z)`` saturated in i.

    With ``unique=False`` the search stops at the first hit instead of
    confirming that no other size works.
    """
    if is_saturated_in(s, i):
        raise PreconditionError(f"shape is already saturated in {i}")
    if s.columns and min(s.heights) < ceil_half(j + 2):
        raise PreconditionError(f"every column must have height >= {ceil_half(j + 2)}")
    unsat = s.unsaturated_indices()
    if len(unsat) > ceil_half(j):
        raise PreconditionError(f"{len(unsat)} unsaturated indices exceed {ceil_half(j)}")
    return _saturating_z(s.k, s.columns, j, i, unique)


@lru_cache(maxsize=1 << 16)
def _saturating_z(k, cols, j, i, unique) -> int:
    hits = []
    for z in range(1, k - ceil_half(j)):
        if _saturated_in(k, _normalized_sum(k, cols, j, z, "rtl-123"), i):
            hits.append(z)
            if not unique:
                break
    if len(hits) != 1:
        raise InvariantViolation(f"saturating sizes {hits} for index {i} at step {j}; expected exactly one")
    return hits[0]
