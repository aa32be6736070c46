"""Brute-force ground truth for the bijection and the rewriting rules.

Nothing here calls ``varphi`` to decide membership: the box enumeration
walks every partition fitting in a rectangle and keeps the irreducible
k-shapes, so its output can be compared with the image of ``varphi``.
The confluence and uniqueness scans replay the rectangle sums made while
running ``varphi`` and re-solve them in other ways.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, List, Optional, Tuple

from . import partial
from .bijection import s_sequence_shape, varphi, varphi_trace
from .errors import DomainError, InvariantViolation, ResourceError
from .partial import ORDERS, PartialKShape, is_saturated_in, oplus
from .partition import Partition, is_irreducible, is_k_shape, shape_stats
from .pistols import enumerate_pistols

BOX_BUDGET = 3_000_000  # partitions in the box; 12 x 12 holds 2,704,156
CONFLUENCE_LIMIT = 7  # k = 7 replays about 80,000 distinct sums in under a minute


@dataclass(frozen=True)
class BoxBound:
    max_width: int
    max_height: int

    def __post_init__(self):
        if self.max_width < 1 or self.max_height < 1:
            raise DomainError(f"box sides must be positive, got {self.max_width} x {self.max_height}")

    @classmethod
    def default(cls, k: int) -> "BoxBound":
        """(k-1)(k-2) on each side: enough columns for every irreducible k-shape."""
        side = max((k - 1) * (k - 2), 1)
        return cls(side, side)

    def size(self) -> int:
        """Number of partitions fitting in the box."""
        return comb(self.max_width + self.max_height, self.max_height)


def _box_candidates(k: int, bound: BoxBound) -> Iterator[Tuple[int, ...]]:
    """Partitions in the box whose k-boundary rows could still shrink upward.

    Rows are chosen from the top of the diagram down.  Adding a row at the
    bottom leaves every hook above it unchanged, so the number of cells of
    hook <= k in each placed row is final; a k-shape needs these counts to
    grow weakly going down, which lets whole subtrees be skipped.
    """
    width, height = bound.max_width, bound.max_height
    conj = [0] * width  # column heights of the rows placed so far
    rows: List[int] = []  # top row first

    def rec(above_len, above_rs):
        yield tuple(reversed(rows))
        if len(rows) == height:
            return
        for length in range(max(above_len, 1), width + 1):
            rs = sum(1 for c in range(length) if (length - c - 1) + conj[c] + 1 <= k)
            if rs < above_rs:
                continue
            rows.append(length)
            for c in range(length):
                conj[c] += 1
            yield from rec(length, rs)
            for c in range(length):
                conj[c] -= 1
            rows.pop()

    yield from rec(0, 1)


def box_enumerate_irreducible(k: int, bound: Optional[BoxBound] = None,
                              budget: int = BOX_BUDGET) -> List[Partition]:
    """Every irreducible k-shape fitting in the box, sorted."""
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    bound = bound or BoxBound.default(k)
    if bound.size() > budget:
        raise ResourceError(f"a {bound.max_width} x {bound.max_height} box holds {bound.size()} partitions, "
                            f"over the budget of {budget}")
    found = []
    for parts in _box_candidates(k, bound):
        p = Partition(parts)
        if is_k_shape(p, k) and is_irreducible(p, k):
            found.append(p)
    return sorted(found)


def varphi_image(k: int) -> List[Partition]:
    """The image of varphi on the pistols of height k - 1, sorted."""
    return sorted(varphi(f) for f in enumerate_pistols(k - 1))


@dataclass
class Anomaly:
    kind: str
    detail: dict

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.detail}


@dataclass
class Report:
    """Outcome of one oracle scan; ``ok`` means no anomalies were seen."""

    name: str
    k: int
    instances: int = 0
    anomalies: List[Anomaly] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.anomalies

    def to_json(self) -> dict:
        return {"check": self.name, "k": self.k, "instances": self.instances, "ok": self.ok,
                "anomalies": [a.to_json() for a in self.anomalies]}

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _varphi_sums(k: int, trials: Optional[int] = None):
    """Distinct (shape, j, z) triples summed while running varphi on SP_{k-1}."""
    seen = {}
    for n, f in enumerate(enumerate_pistols(k - 1)):
        if trials is not None and n >= trials:
            break
        tr = varphi_trace(f)
        for j in range(2 * k - 4, 0, -1):
            s = tr.shapes[j + 1]
            seen.setdefault((s.columns, j, tr.z[j - 1]), f)
    return seen


def check_confluence(k: int, trials: Optional[int] = None, orders=ORDERS) -> Report:
    """Replay the sums made by varphi under several rule scan orders.

    ``trials`` limits the number of pistols (all of them when ``None``).
    Divergences are reported, not raised.
    """
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    if k > CONFLUENCE_LIMIT:
        raise ResourceError(f"confluence replay is limited to k <= {CONFLUENCE_LIMIT}")
    report = Report("confluence", k)
    if trials == 0:
        return report
    for (cols, j, z), f in sorted(_varphi_sums(k, trials).items()):
        s = PartialKShape(k, cols)
        results = {o: oplus(s, j, z, o).columns for o in orders}
        report.instances += 1
        if len(set(results.values())) > 1:
            report.anomalies.append(Anomaly("divergence", {
                "pistol": list(f.values), "columns": [list(c) for c in cols], "j": j, "z": z,
                "results": {o: [list(c) for c in r] for o, r in results.items()}}))
    return report


def check_saturation_uniqueness(k: int) -> Report:
    """Every saturating step of varphi on SP_{k-1} has exactly one solution."""
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    report = Report("saturation-uniqueness", k)
    for f in enumerate_pistols(k - 1):
        tr = varphi_trace(f)
        for j in tr.forced:
            s = tr.shapes[j + 1]
            i = f(j) // 2
            hits = [z for z in range(1, k - partial.ceil_half(j)) if is_saturated_in(oplus(s, j, z), i)]
            report.instances += 1
            if hits != [tr.z[j - 1]]:
                report.anomalies.append(Anomaly("saturating-sizes", {
                    "pistol": list(f.values), "j": j, "i": i, "hits": hits}))
    return report


def check_surjectivity(k: int, bound: Optional[BoxBound] = None) -> Report:
    """Compare the box enumeration with the image of varphi, shape by shape."""
    report = Report("surjectivity", k)
    image = varphi_image(k)
    boxed = box_enumerate_irreducible(k, bound)
    bound = bound or BoxBound.default(k)
    report.instances = len(boxed)
    for p in image:
        if len(p) > bound.max_height or (p.parts and p[0] > bound.max_width):
            report.anomalies.append(Anomaly("image-outside-box", {"parts": list(p.parts)}))
    img, box = set(image), set(boxed)
    for p in sorted(img - box):
        report.anomalies.append(Anomaly("image-not-found-in-box", {"parts": list(p.parts)}))
    for p in sorted(box - img):
        report.anomalies.append(Anomaly("box-shape-not-in-image", {"parts": list(p.parts)}))
    return report


def check_shape_lemmas(k: int, shapes: Optional[List[Partition]] = None) -> Report:
    """Column-count bounds and the rebuilt k-boundary, for every irreducible k-shape given.

    Defaults to the box enumeration, so the shapes come from outside varphi.
    """
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    report = Report("shape-lemmas", k)
    for p in (box_enumerate_irreducible(k) if shapes is None else shapes):
        report.instances += 1
        z = shape_stats(p, k).z
        over = [j for j in range(1, 2 * k - 3) if not 0 <= z[j - 1] <= k - 1 - partial.ceil_half(j)]
        if over:
            report.anomalies.append(Anomaly("z-out-of-range", {"parts": list(p.parts), "sites": over}))
        try:
            s_sequence_shape(p, k)
        except InvariantViolation as exc:
            report.anomalies.append(Anomaly("boundary-not-rebuilt", {"parts": list(p.parts), "error": str(exc)}))
    return report
