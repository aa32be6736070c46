"""The bijection between surjective pistols of height k-1 and irreducible k-shapes.

``varphi`` builds the k-boundary of the image column group by column group,
from the tallest columns (step j = 2k-4) down to the height-1 columns
(step j = 1), with one rectangle sum per step.  ``phi`` reads the column
counts z_j back off the k-boundary, replays the same sums, and decides
from the saturation history which steps were forced ("chained").

Both directions check the structural facts they rely on and raise
:class:`~kshapes.errors.InvariantViolation` naming the fact when one fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from .errors import DomainError, InvariantViolation, PreconditionError
from .partial import PartialKShape, ceil_half, is_saturated_in, oplus, saturating_z
from .partition import (Partition, _classes_of, _is_irreducible_classes, canonical_partition,
                        is_irreducible, is_k_shape, k_boundary, shape_stats)
from .pistols import Pistol, validate


@dataclass(frozen=True)
class VarphiTrace:
    """Everything ``varphi`` computed: the shapes s^j, the z_j and which case built them."""

    pistol: Pistol
    k: int
    shapes: Dict[int, PartialKShape]
    z: Tuple[int, ...]
    forced: Tuple[int, ...]  # steps j built by the saturation case
    partition: Partition


def varphi_trace(f: Pistol, unique: bool = False) -> VarphiTrace:
    """Run the construction step by step; ``unique`` re-checks every saturating size."""
    k = f.height + 1
    top = 2 * k - 4
    s = PartialKShape(max(k, 3))
    shapes = {max(top, 0) + 1: s}
    z = [0] * max(top, 0)
    forced = []
    first = {}
    for j in range(1, top + 1):
        first.setdefault(f(j), j)
    for j in range(top, 0, -1):
        if s.columns and min(s.heights) < ceil_half(j + 2):
            raise InvariantViolation(f"H({j + 1}): a column of s^{j + 1} is shorter than {ceil_half(j + 2)}")
        if len(s.unsaturated_indices()) > ceil_half(j):
            raise InvariantViolation(f"H({j + 1}): too many unsaturated indices in s^{j + 1}")
        i = f(j) // 2
        if f(2 * i) > 2 * i and first[f(j)] == j and not is_saturated_in(s, i):
            zj = saturating_z(s, j, i, unique)
            forced.append(j)
        else:
            zj = i - ceil_half(j)
        z[j - 1] = zj
        s = oplus(s, j, zj)
        shapes[j] = s
    if top <= 0:
        return VarphiTrace(f, k, shapes, (), (), Partition())
    if s.unsaturated_indices():
        raise InvariantViolation("s^1 is not saturated")
    lam = canonical_partition(s.skew())
    return VarphiTrace(f, k, shapes, tuple(z), tuple(sorted(forced)), lam)


def varphi(f: Pistol, check: bool = True) -> Partition:
    """Map a surjective pistol of height k-1 to an irreducible k-shape."""
    tr = varphi_trace(f)
    if check and tr.k >= 3:
        _check_image(tr)
    return tr.partition


def _check_image(tr: VarphiTrace) -> None:
    lam, k = tr.partition, tr.k
    s1 = tr.shapes[1]
    if k_boundary(lam, k) != s1.skew():
        raise InvariantViolation(f"the {k}-boundary of {lam} differs from s^1")
    if not is_k_shape(lam, k):
        raise InvariantViolation(f"{lam} is not a {k}-shape")
    if not is_irreducible(lam, k):
        raise InvariantViolation(f"{lam} is not an irreducible {k}-shape")
    if shape_stats(lam, k).fr_vector != tr.pistol.fix_vector():
        raise InvariantViolation(f"free sites of {lam} do not match the fixed points of {tr.pistol}")


def canonical_labels(p: Partition, k: int) -> Tuple[int, ...]:
    """Label 1 for columns whose bottom row has length k + 1 - height, else 2."""
    s = k_boundary(p, k)
    rs = s.rs
    return tuple(1 if rs[b] + h == k + 1 else 2 for h, b in s.columns)


def s_sequence_shape(p: Partition, k: int) -> Dict[int, PartialKShape]:
    """The shapes s^{2k-3} = empty, .., s^1 rebuilt from the z statistics of p."""
    return dict(_s_sequence(p, k))


@lru_cache(maxsize=4096)
def _s_sequence(p: Partition, k: int) -> Tuple[Tuple[int, PartialKShape], ...]:
    z = shape_stats(p, k).z
    s = PartialKShape(k)
    seq = [(2 * k - 3, s)]
    for j in range(2 * k - 4, 0, -1):
        s = oplus(s, j, z[j - 1])
        seq.append((j, s))
    expected = tuple((h, b, lab) for (h, b), lab in zip(k_boundary(p, k).columns, canonical_labels(p, k)))
    if s.columns != expected:
        raise InvariantViolation(f"s^1 rebuilt from the z statistics of {p} is not its labeled {k}-boundary")
    return tuple(seq)


@dataclass(frozen=True)
class SiteClassification:
    k: int
    z: Tuple[int, ...]
    i_seq: Tuple[int, ...]
    j_seq: Dict[int, int]  # i_p -> j_p
    unchained: Tuple[int, ...]
    chained: Tuple[int, ...]
    ful: int
    fro: int
    sch: int

    @property
    def m(self) -> int:
        return len(self.i_seq)

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "i_seq": list(self.i_seq),
                "j_seq": {str(i): j for i, j in sorted(self.j_seq.items())},
                "L": list(self.unchained), "chained": list(self.chained),
                "ful": self.ful, "fro": self.fro, "sch": self.sch}


def classify_sites(p: Partition, k: int) -> SiteClassification:
    """Split the sites 1..2k-4 of an irreducible k-shape into chained and unchained."""
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    stats = shape_stats(p, k)
    z = stats.z
    seq = s_sequence_shape(p, k)
    i_seq = tuple(i for i in range(1, k - 1) if stats.x[i - 1] > 0)
    j_seq = {}
    for i in i_seq:
        sat = [j for j in range(1, 2 * i) if is_saturated_in(seq[j], i)]
        if not sat:
            raise InvariantViolation(f"no s^j with j < {2 * i} is saturated in {i}")
        j_seq[i] = max(sat)
    owner = {}
    for i, j in j_seq.items():
        owner.setdefault(j, []).append(i)
    unchained = list(range(1, 2 * k - 3))
    for j in range(1, 2 * k - 3):
        for i in owner.get(j, ()):
            if j in unchained and not any(j2 < j and ceil_half(j2) + z[j2 - 1] == i for j2 in unchained):
                unchained.remove(j)
                if len(owner[j]) > 1:
                    raise InvariantViolation(f"site {j} is claimed by several indices {owner[j]}")
    L = set(unchained)
    chained = tuple(j for j in range(1, 2 * k - 3) if j not in L)
    ful = sum(1 for j in unchained if z[j - 1] == k - 1 - ceil_half(j))
    fro = sum(1 for j in range(1, 2 * k - 3, 2) if z[j - 1] == 0)
    sch = sum(1 for j in chained if 2 * owner[j][0] == j + 1)
    for j in range(1, 2 * k - 3):
        if z[j - 1] == 0 and j not in L:
            raise InvariantViolation(f"free site {j} is chained")
    return SiteClassification(k, z, i_seq, j_seq, tuple(unchained), chained, ful, fro, sch)


def phi(p: Partition, k: int, check: bool = True) -> Pistol:
    """Map an irreducible k-shape to a surjective pistol of height k-1."""
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    sites = classify_sites(p, k)
    z = sites.z
    L = set(sites.unchained)
    chained_to = {j: i for i, j in sites.j_seq.items() if j not in L}
    vals = []
    for j in range(1, 2 * k - 3):
        vals.append(2 * (ceil_half(j) + z[j - 1]) if j in L else 2 * chained_to[j])
    vals += [2 * k - 2, 2 * k - 2]
    try:
        f = validate(vals)
    except DomainError as exc:
        raise InvariantViolation(f"phi({p}) = {tuple(vals)} is not a surjective pistol: {exc}") from exc
    if check:
        if f.fix_vector() != shape_stats(p, k).fr_vector:
            raise InvariantViolation(f"fixed points of phi({p}) do not match its free sites")
        for i, j in sites.j_seq.items():
            first = min(jj for jj in range(1, 2 * k - 3) if f(jj) == 2 * i)
            if (j not in L) != (j == first):
                raise InvariantViolation(f"site {j} of index {i}: chained status disagrees with first preimage {first}")
    return f


def shape_site_stats(p: Partition, k: int) -> Tuple[int, int, int]:
    """(ful, fr, fro + sch) for an irreducible k-shape."""
    sites = classify_sites(p, k)
    return sites.ful, shape_stats(p, k).fr, sites.fro + sites.sch
