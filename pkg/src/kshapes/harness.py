"""Verification suites behind ``kshapes verify``.

Each suite takes the shape-side k and returns a list of
:class:`CheckResult`.  A check that does not apply to the given k (for
instance a polynomial identity whose enumeration is over budget) is
reported with status ``SKIP`` and does not count as a failure.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .bijection import classify_sites, phi, varphi
from .errors import KShapeError
from .oracle import (check_confluence, check_saturation_uniqueness, check_shape_lemmas,
                     check_surjectivity, CONFLUENCE_LIMIT)
from .partition import Partition, shape_stats
from .pistols import Pistol, enumerate_pistols, validate
from .poly import dumont_foata, gamma, gandhi, genocchi, poly_from_pistols, poly_from_shapes

SUITES = ("counts", "bijection", "conjecture", "theorems", "confluence")

# the worked example at k = 6
EXAMPLE_PISTOL = (2, 8, 4, 10, 10, 6, 8, 10, 10, 10)
EXAMPLE_SHAPE = (12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1)
EXAMPLE_Z = (3, 2, 1, 3, 2, 0, 0, 1)
EXAMPLE_L = (4, 5, 6, 7, 8)
EXAMPLE_FR = (0, 0, 1, 0)


@dataclass
class CheckResult:
    suite: str
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""
    seconds: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"

    def to_json(self) -> dict:
        return {"suite": self.suite, "check": self.name, "status": self.status,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


class _Collector:
    def __init__(self, suite):
        self.suite = suite
        self.results: List[CheckResult] = []

    def run(self, name: str, fn: Callable[[], Tuple[bool, str]]) -> None:
        t = time.perf_counter()
        try:
            ok, detail = fn()
            status = "PASS" if ok else "FAIL"
        except KShapeError as exc:
            status, detail = "FAIL", f"{type(exc).__name__}: {exc}"
        self.results.append(CheckResult(self.suite, name, status, detail, time.perf_counter() - t))

    def skip(self, name: str, why: str) -> None:
        self.results.append(CheckResult(self.suite, name, "SKIP", why))


class _Images:
    """varphi over SP_{k-1}, computed once and shared by the suites."""

    def __init__(self):
        self._cache: Dict[int, Tuple[List[Pistol], List[Partition]]] = {}

    def get(self, k):
        if k not in self._cache:
            pistols = list(enumerate_pistols(k - 1))
            self._cache[k] = (pistols, [varphi(f) for f in pistols])
        return self._cache[k]


def suite_counts(k: int, images: _Images) -> List[CheckResult]:
    c = _Collector("counts")
    if k < 2:
        c.skip("enumeration = recursion", "needs k >= 2")
        return c.results

    def check():
        n = sum(1 for _ in enumerate_pistols(k - 1))
        g = genocchi(k)
        return n == g, f"|SP_{k - 1}| = {n}, G_{2 * k} = {g}"

    c.run("enumeration = recursion", check)
    return c.results


def suite_bijection(k: int, images: _Images, deep: bool = False) -> List[CheckResult]:
    c = _Collector("bijection")
    if k < 3:
        c.skip("varphi", "needs k >= 3")
        return c.results

    def injective():
        pistols, shapes = images.get(k)
        return len(set(shapes)) == len(pistols), f"{len(set(shapes))} distinct images of {len(pistols)} pistols"

    def left_inverse():
        pistols, shapes = images.get(k)
        bad = sum(1 for f, p in zip(pistols, shapes) if phi(p, k) != f)
        return bad == 0, f"{bad} failures"

    def right_inverse():
        _, shapes = images.get(k)
        bad = sum(1 for p in shapes if varphi(phi(p, k)) != p)
        return bad == 0, f"{bad} failures"

    c.run("varphi injective, images irreducible", injective)
    c.run("phi after varphi = id", left_inverse)
    c.run("varphi after phi = id", right_inverse)
    if k <= 4 or (k == 5 and deep):
        def surjective():
            r = check_surjectivity(k)
            return r.ok, f"{r.instances} shapes in the box, {len(r.anomalies)} anomalies"
        c.run("box enumeration = image", surjective)
    else:
        c.skip("box enumeration = image", "k = 5 needs --deep" if k == 5 else "box too large")
    if k == 6:
        c.run("worked example", check_worked_example)
    return c.results


def check_worked_example() -> Tuple[bool, str]:
    f = validate(EXAMPLE_PISTOL)
    p = varphi(f)
    sites = classify_sites(p, 6)
    checks = {
        "shape": p.parts == EXAMPLE_SHAPE,
        "z": shape_stats(p, 6).z == EXAMPLE_Z,
        "L": sites.unchained == EXAMPLE_L,
        "fr": shape_stats(p, 6).fr_vector == EXAMPLE_FR == f.fix_vector(),
        "phi": phi(p, 6) == f,
    }
    bad = [name for name, ok in checks.items() if not ok]
    return not bad, "mismatch in " + ", ".join(bad) if bad else f"{f} <-> {p}"


def suite_conjecture(k: int, images: _Images) -> List[CheckResult]:
    c = _Collector("conjecture")
    if k < 3:
        c.skip("fix/fr histograms", "needs k >= 3")
        return c.results

    def check():
        pistols, shapes = images.get(k)
        fix = Counter(f.fix_vector() for f in pistols)
        fr = Counter(shape_stats(p, k).fr_vector for p in shapes)
        return fix == fr, f"{len(fix)} vectors"

    c.run("fix/fr histograms", check)
    return c.results


def suite_theorems(k: int, images: _Images) -> List[CheckResult]:
    c = _Collector("theorems")
    n = k - 1  # pistol height
    if n < 1:
        c.skip("polynomial identities", "needs k >= 2")
        return c.results

    def eq(a, b):
        return lambda: (a() == b(), "")

    if n <= 6:
        c.run(f"gandhi sum over SP_{n}", eq(lambda: poly_from_pistols(n, "gandhi"), lambda: gandhi(n)))
    else:
        c.skip(f"gandhi sum over SP_{n}", "over budget")
    if n <= 5:
        F = dumont_foata(n)
        c.run(f"max/fix/pro sum over SP_{n}", eq(lambda: poly_from_pistols(n, "df-pro"), lambda: F))
        c.run(f"max/fix/sur sum over SP_{n}", eq(lambda: poly_from_pistols(n, "df-sur"), lambda: F))
        c.run(f"F_{n} symmetric", lambda: (F.is_symmetric_xyz(), ""))
        c.run(f"gamma sum over SP_{n}", eq(lambda: poly_from_pistols(n, "gamma"), lambda: gamma(n)))
        c.run(f"gamma diagonal = F_{n}", eq(lambda: gamma(n).diagonal(), lambda: F))
        c.run(f"shape sum over IS_{k}", eq(lambda: poly_from_shapes(n), lambda: F))
    else:
        c.skip("Dumont-Foata identities", "checked for pistol height <= 5")
    return c.results


def suite_confluence(k: int, images: _Images) -> List[CheckResult]:
    c = _Collector("confluence")
    if k < 3:
        c.skip("rule orders agree", "needs k >= 3")
        return c.results
    if k <= CONFLUENCE_LIMIT:
        def orders():
            r = check_confluence(k)
            return r.ok, f"{r.instances} sums, {len(r.anomalies)} divergences"
        c.run("rule orders agree", orders)
    else:
        c.skip("rule orders agree", f"k > {CONFLUENCE_LIMIT}")

    def unique():
        r = check_saturation_uniqueness(k)
        return r.ok, f"{r.instances} saturating steps, {len(r.anomalies)} anomalies"

    def lemmas():
        r = check_shape_lemmas(k, images.get(k)[1])
        return r.ok, f"{r.instances} shapes, {len(r.anomalies)} anomalies"

    c.run("saturating size unique", unique)
    c.run("z bounds and rebuilt boundary", lemmas)
    return c.results


def run_suites(k: int, suite: str = "all", deep: bool = False,
               images: Optional[_Images] = None) -> List[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    images = images or _Images()
    chosen = SUITES if suite == "all" else (suite,)
    out: List[CheckResult] = []
    for name in chosen:
        if name == "counts":
            out += suite_counts(k, images)
        elif name == "bijection":
            out += suite_bijection(k, images, deep)
        elif name == "conjecture":
            out += suite_conjecture(k, images)
        elif name == "theorems":
            out += suite_theorems(k, images)
        else:
            out += suite_confluence(k, images)
    return out


def format_table(results: List[CheckResult]) -> str:
    w1 = max([len(r.suite) for r in results] + [5])
    w2 = max([len(r.name) for r in results] + [5])
    lines = [f"{'suite':<{w1}}  {'check':<{w2}}  status  detail"]
    for r in results:
        lines.append(f"{r.suite:<{w1}}  {r.name:<{w2}}  {r.status:<6}  {r.detail}".rstrip())
    return "\n".join(lines)
