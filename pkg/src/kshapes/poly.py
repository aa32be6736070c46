"""Exact polynomials in x, y, z, xbar, ybar, zbar and the three recursive families.

A :class:`MultiPoly` maps exponent vectors of length six to Python
integers, so coefficients never overflow.  Only the handful of operations
the recursions need are provided: ring arithmetic, the shift of one
variable by 1 (expanded with binomial coefficients), substitution of the
barred variables by the plain ones, and evaluation.

The generating sums ``poly_from_pistols`` and ``poly_from_shapes``
enumerate combinatorial objects and add one monomial per object.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DomainError, ResourceError

VARS = ("x", "y", "z", "xbar", "ybar", "zbar")
NVARS = len(VARS)

Exp = Tuple[int, ...]

PISTOL_BUDGET = 7  # largest pistol height poly_from_pistols will enumerate
SHAPE_BUDGET = 6  # largest pistol height poly_from_shapes will push through varphi


def _exp(**powers) -> Exp:
    return tuple(powers.get(v, 0) for v in VARS)


@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial; ``terms`` never stores a zero coefficient."""

    terms: Tuple[Tuple[Exp, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[Exp, int]) -> "MultiPoly":
        return cls(tuple(sorted((tuple(e), c) for e, c in d.items() if c)))

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls.from_dict({(0,) * NVARS: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        if name not in VARS:
            raise DomainError(f"unknown variable {name!r}")
        return cls.from_dict({_exp(**{name: 1}): 1})

    @classmethod
    def monomial(cls, coef: int = 1, **powers) -> "MultiPoly":
        return cls.from_dict({_exp(**powers): coef})

    def as_dict(self) -> Dict[Exp, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _coerce(other)
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return MultiPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        d: Dict[Exp, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return MultiPoly.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not polynomials")
        out = MultiPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, name: str, by: int = 1) -> "MultiPoly":
        """Substitute ``name -> name + by``."""
        v = VARS.index(name)
        d: Dict[Exp, int] = {}
        for e, c in self.terms:
            n = e[v]
            for m in range(n + 1):
                e2 = e[:v] + (m,) + e[v + 1:]
                d[e2] = d.get(e2, 0) + c * comb(n, m) * by ** (n - m)
        return MultiPoly.from_dict(d)

    def diagonal(self) -> "MultiPoly":
        """Substitute xbar -> x, ybar -> y, zbar -> z."""
        d: Dict[Exp, int] = {}
        for e, c in self.terms:
            e2 = (e[0] + e[3], e[1] + e[4], e[2] + e[5], 0, 0, 0)
            d[e2] = d.get(e2, 0) + c
        return MultiPoly.from_dict(d)

    def substitute(self, **values: int) -> "MultiPoly":
        """Replace the named variables by integers, keeping the others."""
        for name in values:
            if name not in VARS:
                raise DomainError(f"unknown variable {name!r}")
        idx = [(VARS.index(n), v) for n, v in values.items()]
        d: Dict[Exp, int] = {}
        for e, c in self.terms:
            e2 = list(e)
            for i, val in idx:
                c *= val ** e2[i]
                e2[i] = 0
            d[tuple(e2)] = d.get(tuple(e2), 0) + c
        return MultiPoly.from_dict(d)

    def evaluate(self, **values: int) -> int:
        missing = [VARS[i] for i in self.variables() if VARS[i] not in values]
        if missing:
            raise DomainError(f"no value given for {', '.join(missing)}")
        rest = self.substitute(**values)
        return rest.as_dict().get((0,) * NVARS, 0)

    def variables(self) -> Tuple[int, ...]:
        return tuple(i for i in range(NVARS) if any(e[i] for e, _ in self.terms))

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename variable i to variable perm[i]."""
        d: Dict[Exp, int] = {}
        for e, c in self.terms:
            e2 = [0] * NVARS
            for i, p in enumerate(perm):
                e2[p] += e[i]
            d[tuple(e2)] = d.get(tuple(e2), 0) + c
        return MultiPoly.from_dict(d)

    def is_symmetric_xyz(self) -> bool:
        """Invariance under every permutation of x, y, z."""
        return all(self.permute(p) == self for p in ((1, 0, 2, 3, 4, 5), (0, 2, 1, 3, 4, 5)))

    def ordered_terms(self):
        """Terms in grevlex order, largest first."""
        return sorted(self.terms, key=lambda t: _grevlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.ordered_terms()):
            mono = "*".join(VARS[v] + (f"^{n}" if n > 1 else "") for v, n in enumerate(e) if n)
            a = abs(c)
            body = mono if a == 1 and mono else (f"{a}*{mono}" if mono else str(a))
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_json(self) -> dict:
        return {"monomials": [{"exp": list(e), "coef": str(c)} for e, c in self.ordered_terms()]}

    @classmethod
    def from_json(cls, obj) -> "MultiPoly":
        return cls.from_dict({tuple(m["exp"]): int(m["coef"]) for m in obj["monomials"]})


def _grevlex_key(e: Exp):
    # higher total degree first; ties broken by the smaller power of the last
    # variable where the vectors differ
    return (sum(e),) + tuple(-a for a in reversed(e))


def _coerce(v) -> MultiPoly:
    if isinstance(v, MultiPoly):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return MultiPoly.constant(v)
    raise TypeError(f"cannot combine a polynomial with {type(v).__name__}")


X, Y, Z = (MultiPoly.var(n) for n in ("x", "y", "z"))
XB, YB, ZB = (MultiPoly.var(n) for n in ("xbar", "ybar", "zbar"))


def _check_k(k: int, least: int = 1) -> None:
    if not isinstance(k, int) or k < least:
        raise DomainError(f"k must be an integer >= {least}, got {k!r}")


def gandhi(k: int) -> MultiPoly:
    """Q_{2k}(x), starting from Q_2 = x^2."""
    _check_k(k)
    q = X * X
    for _ in range(k - 1):
        q = X * X * (q.shift("x") - q)
    return q


def genocchi(k: int) -> int:
    """G_{2k} = Q_{2k-2}(1), for k >= 2."""
    _check_k(k, 2)
    return gandhi(k - 1).evaluate(x=1)


def dumont_foata(k: int) -> MultiPoly:
    _check_k(k)
    f = MultiPoly.constant(1)
    for _ in range(k - 1):
        f = (X + Y) * (X + Z) * f.shift("x") - X * X * f
    return f


def gamma(k: int) -> MultiPoly:
    """The six-variable refinement of the Dumont-Foata polynomials."""
    _check_k(k)
    g = MultiPoly.constant(1)
    extra = X * (YB - Y) + XB * (Z - ZB) - X * XB
    for _ in range(k - 1):
        g = (X + ZB) * (Y + XB) * g.shift("x").shift("xbar") + extra * g
    return g


WEIGHTINGS = ("gandhi", "df-pro", "df-sur", "gamma")


def pistol_exponent(stats, weighting: str) -> Exp:
    """Exponent vector contributed by one pistol with the given point statistics."""
    if weighting == "gandhi":
        return _exp(x=stats.fix + 2)
    if weighting == "df-pro":
        return _exp(x=stats.max, y=stats.fix, z=stats.pro)
    if weighting == "df-sur":
        return _exp(x=stats.max, y=stats.fix, z=stats.sur)
    if weighting == "gamma":
        return _exp(x=stats.mo, y=stats.fl, z=stats.snl, xbar=stats.me, ybar=stats.fnl, zbar=stats.sl)
    raise DomainError(f"unknown weighting {weighting!r}; expected one of {', '.join(WEIGHTINGS)}")


def _sum_monomials(exps: Iterable[Exp]) -> MultiPoly:
    d: Dict[Exp, int] = {}
    for e in exps:
        d[e] = d.get(e, 0) + 1
    return MultiPoly.from_dict(d)


def poly_from_pistols(k: int, weighting: str, pro_variant: str = "default") -> MultiPoly:
    """Sum of one monomial per surjective pistol of height k."""
    from .pistols import enumerate_pistols, point_stats

    _check_k(k)
    if weighting not in WEIGHTINGS:
        raise DomainError(f"unknown weighting {weighting!r}; expected one of {', '.join(WEIGHTINGS)}")
    if k > PISTOL_BUDGET:
        raise ResourceError(f"pistol height {k} exceeds the enumeration budget {PISTOL_BUDGET}")
    return _sum_monomials(pistol_exponent(point_stats(f, pro_variant), weighting)
                          for f in enumerate_pistols(k))


def poly_from_shapes(k: int) -> MultiPoly:
    """Sum of x^ful y^fr z^(fro+sch) over the irreducible (k+1)-shapes."""
    from .bijection import shape_site_stats, varphi
    from .pistols import enumerate_pistols

    _check_k(k)
    if k > SHAPE_BUDGET:
        raise ResourceError(f"pistol height {k} exceeds the shape budget {SHAPE_BUDGET}")
    if k == 1:
        # the empty partition is the only irreducible 2-shape, all statistics zero
        return MultiPoly.constant(1)
    exps = []
    for f in enumerate_pistols(k):
        ful, fr, rest = shape_site_stats(varphi(f), k + 1)
        exps.append(_exp(x=ful, y=fr, z=rest))
    return _sum_monomials(exps)


def prominent_convention_search(kmax: int = 5) -> Tuple[str, ...]:
    """Prominent-point variants whose df-pro sum matches the recursion for every k <= kmax."""
    from .pistols import PRO_VARIANTS

    return tuple(v for v in PRO_VARIANTS
                 if all(poly_from_pistols(k, "df-pro", v) == dumont_foata(k) for k in range(1, kmax + 1)))
