"""Gopakumar-Vafa transforms and the local BPS invariants of a genus-g curve.

Entries are indexed by degree ``d >= 1`` and genus shift ``h >= 0``; the
curve genus ``g`` is fixed per table.  GW tables hold ``N_d^h(g)``, BPS
tables hold ``n_d^h(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .chebyshev import p_poly
from .covers import ConsistencyError, connected_cover_count, cover_counts, d_quad
from .series import DomainError, Polynomial, PowerSeries, arcsin_norm_series, ps_ipow, sin_sq_series

__all__ = [
    "AlphaRow",
    "BpsCell",
    "CellStatus",
    "GvSeries",
    "RangeError",
    "UpsilonReport",
    "alpha",
    "alpha_row",
    "d_min",
    "divisors",
    "epsilon",
    "etale_bps",
    "etale_bps_values",
    "etale_gw_forward",
    "gv_forward",
    "gv_invert",
    "local_bps",
    "mobius",
    "tilde_N",
    "upsilon_check",
    "xi_check",
]


class RangeError(ValueError):
    """A transform was asked for entries its input table does not determine."""


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined on positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class AlphaRow:
    g_prime: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if self.coefficients[0] != 1:
            raise ValueError("alpha_{g', g'} must be 1")

    def __getitem__(self, g: int) -> Fraction:
        return self.coefficients[g - self.g_prime]


@lru_cache(maxsize=None)
def alpha_row(g_prime: int, length: int) -> AlphaRow:
    """``alpha[g, g']`` for ``g' <= g <= g' + length``."""
    series = ps_ipow(arcsin_norm_series(length), 2 * g_prime - 2)
    return AlphaRow(g_prime, series.coefficients)


def alpha(g: int, g_prime: int) -> Fraction:
    """Coefficient of ``r^(g-g')`` in ``(arcsin(sqrt(r)/2)/(sqrt(r)/2))^(2g'-2)``."""
    if not 0 <= g_prime <= g:
        raise DomainError("alpha needs 0 <= g' <= g")
    return alpha_row(g_prime, max(8, g - g_prime))[g]


class CellStatus(str, Enum):
    ETALE = "etale-exact"
    KNOWN = "full-known"
    UNKNOWN = "unknown"


@dataclass
class GvSeries:
    g: int
    kind: str
    d_max: int
    h_max: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("GW", "BPS"):
            raise ValueError(f"kind must be GW or BPS, not {self.kind!r}")
        for d in range(1, self.d_max + 1):
            for h in range(self.h_max + 1):
                self.entries.setdefault((d, h), Fraction(0))
                self.entries[(d, h)] = Fraction(self.entries[(d, h)])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        if key not in self.entries:
            raise RangeError(f"entry {key} is outside d <= {self.d_max}, h <= {self.h_max}")
        return self.entries[key]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GvSeries)
            and (self.g, self.kind, self.d_max, self.h_max) == (other.g, other.kind, other.d_max, other.h_max)
            and self.entries == other.entries
        )


def _sin_power_ratio(k: int, m: int, order: int) -> PowerSeries:
    """``(4 sin^2(k t/2) / (k t)^2)^m`` in powers of ``t**2``; defined for every integer m."""
    s = sin_sq_series(order + 1, scale=Fraction(k, 2)).shift_down(1)
    return ps_ipow(s * Fraction(1, k * k), m)


def gv_forward(n_table: GvSeries) -> GvSeries:
    """GW table from a BPS table by expanding the multiple-cover sum."""
    if n_table.kind != "BPS":
        raise ValueError("gv_forward takes a BPS table")
    g, d_max, h_max = n_table.g, n_table.d_max, n_table.h_max
    out = {}
    for D in range(1, d_max + 1):
        for k in divisors(D):
            d = D // k
            for h in range(h_max + 1):
                n = n_table[(d, h)]
                if not n:
                    continue
                m = g + h - 1
                # (1/k) (2 sin(kt/2))^(2m) = (1/k) k^(2m) t^(2m) * ratio(t^2)
                ratio = _sin_power_ratio(k, m, h_max - h)
                scale = n * Fraction(k) ** (2 * m) / k
                for H in range(h, h_max + 1):
                    out[(D, H)] = out.get((D, H), Fraction(0)) + scale * ratio[H - h]
    return GvSeries(g, "GW", d_max, h_max, out)


def gv_invert(N_table: GvSeries) -> GvSeries:
    """BPS table from a GW table by Mobius inversion."""
    if N_table.kind != "GW":
        raise ValueError("gv_invert takes a GW table")
    g, d_max, h_max = N_table.g, N_table.d_max, N_table.h_max
    out = {}
    for d in range(1, d_max + 1):
        for h in range(h_max + 1):
            total = Fraction(0)
            for h1 in range(h + 1):
                a = alpha(h + g, h1 + g)
                if not a:
                    continue
                for k in divisors(d):
                    mu = mobius(k)
                    if mu:
                        total += mu * Fraction(k) ** (2 * (g + h1) - 3) * a * N_table[(d // k, h1)]
            out[(d, h)] = total
    return GvSeries(g, "BPS", d_max, h_max, out)


def etale_gw_forward(d_max: int, g: int, h_max: int) -> GvSeries:
    """Étale part of the local GW invariants.

    Only the degree-``d`` connected étale covers feed degree ``d``; each
    contributes ``C_{d,g}`` times the degree-one series of the cover, whose
    genus is ``d(g-1)+1``, i.e. ``(4 sin^2(t/2))^(d(g-1))``.
    """
    out = {}
    counts = cover_counts(d_max, g)
    for d in range(1, d_max + 1):
        m = d * (g - 1)
        C = counts[d - 1].C
        # [t^(2(g+h-1))] (4 sin^2(t/2))^m = [T^(g+h-1-m)] ratio(T)
        ratio = _sin_power_ratio(1, m, max(h_max + g - 1 - m, 0))
        for h in range(h_max + 1):
            shift = g + h - 1 - m
            out[(d, h)] = C * ratio[shift] if shift >= 0 else Fraction(0)
    return GvSeries(g, "GW", d_max, h_max, out)


@lru_cache(maxsize=None)
def etale_bps(d: int, g: int) -> Polynomial:
    """``sum_h n_d^h(g)^et y^(h+g-1)`` as an exact polynomial in ``y``.

    Each divisor ``k`` of ``d`` contributes ``mu(k)/k * C_{d/k,g} * P_k(y)^(d(g-1)/k)``.
    """
    if d < 1 or g < 1:
        raise DomainError("etale_bps needs d >= 1 and g >= 1")
    total = Polynomial()
    for k in divisors(d):
        mu = mobius(k)
        if mu:
            C = connected_cover_count(d // k, g)
            total = total + p_poly(k).poly ** (d * (g - 1) // k) * (Fraction(mu, k) * C)
    if not total.is_integral():
        raise ConsistencyError(f"non-integer étale BPS invariant at d={d}, g={g}")
    top = (d - 1) * (g - 1)
    if total.degree > top + g - 1 or any(total[i] for i in range(g - 1)):
        raise ConsistencyError(f"étale BPS support outside 0 <= h <= {top} at d={d}, g={g}")
    return total


def etale_bps_values(d: int, g: int) -> list[int]:
    """``[n_d^h(g)^et for h in 0..(d-1)(g-1)]``."""
    poly = etale_bps(d, g)
    return [int(poly[h + g - 1]) for h in range((d - 1) * (g - 1) + 1)]


def xi_check(d: int, g: int) -> Polynomial:
    """``sum_k mu(k) c_{d/k,g} P_k^(d(g-1)/k)``; asserted divisible by ``d``."""
    if d < 1 or g < 1:
        raise DomainError("xi_check needs d >= 1 and g >= 1")
    counts = cover_counts(d, g)
    xi = Polynomial()
    for k in divisors(d):
        mu = mobius(k)
        if mu:
            xi = xi + p_poly(k).poly ** (d * (g - 1) // k) * (mu * counts[d // k - 1].c)
    if not xi.is_integral() or any(int(c) % d for c in xi.coefficients):
        raise ConsistencyError(f"Xi is not divisible by {d} at g={g}")
    if xi * Fraction(1, d) != etale_bps(d, g):
        raise ConsistencyError(f"Xi/d differs from the étale polynomial at d={d}, g={g}")
    return xi


def d_min(d: int) -> int | None:
    """Smallest divisor ``d' > 1`` of ``d`` with ``mu(d/d') != 0``; None for ``d = 1``."""
    for k in divisors(d)[1:]:
        if mobius(d // k):
            return k
    return None


def epsilon(d: int, g: int) -> int:
    dm = d_min(d)
    if dm is None:
        raise DomainError("epsilon is undefined for d = 1")
    q = d // dm
    return mobius(q) * q ** (dm * (g - 1) + 2)


def tilde_N(d: int, g: int) -> Fraction:
    """Contribution of the two-branch-point component to ``N_d^h(g)``."""
    quad = d_quad(d, g)
    return Fraction(g - 1, 8) * ((g - 1) * quad.D - quad.Dstar - quad.Dstarstar / 27)


@dataclass(frozen=True)
class BpsCell:
    d: int
    g: int
    h: int
    value: Fraction | None
    status: CellStatus
    note: str = ""


def local_bps(d: int, g: int, h: int) -> BpsCell:
    """Full local BPS invariant where it is determined, else an unknown cell."""
    if g < 2 or h < 0:
        raise DomainError("local_bps needs g >= 2 and h >= 0")
    dm = d_min(d)
    poly = etale_bps(d, g)
    etale = poly[h + g - 1]
    if dm is None or h <= (dm - 1) * (g - 1):
        return BpsCell(d, g, h, etale, CellStatus.KNOWN, "étale")
    if h == (dm - 1) * (g - 1) + 1:
        eps = epsilon(d, g)
        value = etale + eps * tilde_N(dm, g)
        return BpsCell(d, g, h, value, CellStatus.KNOWN, f"étale + ({eps})*Ñ_{dm}({g})")
    return BpsCell(d, g, h, None, CellStatus.UNKNOWN)


@dataclass(frozen=True)
class UpsilonReport:
    d: int
    g: int
    value: int
    applicable: bool
    divisible: bool

    @property
    def passes(self) -> bool | None:
        return self.divisible if self.applicable else None


def upsilon_check(d: int, g: int) -> UpsilonReport:
    """``216 * Ñ_d(g)``, asserted integral, with its residue mod 216."""
    quad = d_quad(d, g)
    value = (g - 1) * (27 * (g - 1) * quad.D - 27 * quad.Dstar - quad.Dstarstar)
    if value.denominator != 1:
        raise ConsistencyError(f"Upsilon_{d},{g} = {value} is not an integer")
    value = int(value)
    applicable = not any(d % m == 0 for m in (4, 6, 9))
    return UpsilonReport(d, g, value, applicable, value % 216 == 0)
