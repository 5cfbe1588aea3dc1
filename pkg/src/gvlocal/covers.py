"""Weighted counts of unramified and branched covers of a genus-g curve.

All counts are weighted by ``1/|Aut|``.  Disconnected counts come from the
Frobenius character sum; connected counts are extracted from them with the
exponential formula, tracking how every nontrivial branch cycle is shared
out among components.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .series import DomainError, PowerSeries, ps_log
from .symgroup import Partition, char_table, class_size

__all__ = [
    "ConsistencyError",
    "CoverCounts",
    "HurwitzQuad",
    "a_count",
    "cover_counts",
    "d_quad",
    "hurwitz_connected",
    "hurwitz_disconnected",
    "simple_profile",
]


class ConsistencyError(AssertionError):
    """Two independent routes to the same number disagreed, or a proven
    integrality/congruence statement failed.  Always a bug."""


@dataclass(frozen=True)
class CoverCounts:
    d: int
    g: int
    A: int
    a: int | Fraction
    C: Fraction
    c: int

    def __post_init__(self):
        if Fraction(self.A, math.factorial(self.d)) != self.a:
            raise ConsistencyError(f"a != A/d! at d={self.d}, g={self.g}")
        if self.d * self.C != self.c:
            raise ConsistencyError(f"c != d*C at d={self.d}, g={self.g}")


@dataclass(frozen=True)
class HurwitzQuad:
    d: int
    g: int
    D: Fraction
    Dstar: Fraction
    Dstarstar: Fraction
    Dstarstarstar: Fraction

    def __post_init__(self):
        if self.D != self.Dstar + 3 * self.Dstarstar + 2 * self.Dstarstarstar:
            raise ConsistencyError(f"degeneration relation fails at d={self.d}, g={self.g}")
        if self.d < 3 and self.Dstarstar:
            raise ConsistencyError("a 3-cycle needs degree at least 3")
        if self.d < 4 and self.Dstarstarstar:
            raise ConsistencyError("two 2-cycles need degree at least 4")


@lru_cache(maxsize=None)
def a_count(d: int, g: int) -> int | Fraction:
    """``#Hom(pi_1(Sigma_g), S_d) / d!`` as ``sum_chi (d!/dim chi)^(2g-2)``.

    An integer for ``g >= 1``; for ``g = 0`` the value is ``1/d!``.
    """
    if d < 1 or g < 0:
        raise DomainError("need d >= 1 and g >= 0")
    order = math.factorial(d)
    total = sum(Fraction(order, f) ** (2 * g - 2) for f in char_table(d).dims)
    if g == 0:
        return total
    if total.denominator != 1:
        raise ConsistencyError(f"a_{d},{g} is not an integer")
    return int(total)


@lru_cache(maxsize=None)
def _cover_counts(d_max: int, g: int) -> tuple[CoverCounts, ...]:
    a = [Fraction(1)] + [Fraction(a_count(k, g)) for k in range(1, d_max + 1)]
    C = ps_log(PowerSeries(a, "t"))

    # l a_l = sum_{n=0}^{l-1} a_n c_{l-n}
    c = [Fraction(0)] * (d_max + 1)
    for l in range(1, d_max + 1):
        c[l] = l * a[l] - sum((a[n] * c[l - n] for n in range(1, l)), Fraction(0))
        if c[l].denominator != 1:
            raise ConsistencyError(f"c_{l},{g} is not an integer")
        if c[l] != l * C[l]:
            raise ConsistencyError(f"log and recursion disagree at d={l}, g={g}")

    out = []
    for k in range(1, d_max + 1):
        ak = a_count(k, g)
        out.append(CoverCounts(k, g, int(ak * math.factorial(k)), ak, C[k], int(c[k])))
    return tuple(out)


def cover_counts(d_max: int, g: int) -> list[CoverCounts]:
    if d_max < 1:
        raise DomainError("d_max must be positive")
    return list(_cover_counts(d_max, g))


def connected_cover_count(d: int, g: int) -> Fraction:
    return _cover_counts(d, g)[-1].C


def _normalize(profile: Sequence, d: int) -> tuple[Partition, ...]:
    out = []
    for mu in profile:
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        if mu.size != d:
            raise DomainError(f"branch class {mu} is not a partition of {d}")
        out.append(mu)
    return tuple(out)


@lru_cache(maxsize=None)
def _disconnected(d: int, g: int, profile: tuple[Partition, ...]) -> Fraction:
    table = char_table(d)
    order = math.factorial(d)
    cols = [(class_size(mu), table.column(mu)) for mu in profile]
    total = Fraction(0)
    for i, f in enumerate(table.dims):
        term = Fraction(order, f) ** (2 * g - 2)
        for size, col in cols:
            term *= Fraction(size * col[i], f)
        total += term
    return total


def hurwitz_disconnected(d: int, g: int, profile: Sequence = ()) -> Fraction:
    """Frobenius sum ``sum_chi (d!/f)^(2g-2) prod_i |C_i| chi(C_i) / f``."""
    return _disconnected(d, g, _normalize(profile, d))


# A "decorated degree" is (degree, per-branch-point multiplicity vectors) where
# each vector counts how many of that point's nontrivial cycles of each length
# the cover carries; cycle lengths per point are listed in ``shapes``.


@lru_cache(maxsize=None)
def _connected(d: int, g: int, profile: tuple[Partition, ...]) -> Fraction:
    shapes = []
    for mu in profile:
        shapes.append(tuple(sorted(Counter(mu.nontrivial()).items(), reverse=True)))
    shapes = tuple(shapes)

    def vectors(bounds):
        return itertools.product(*(range(m + 1) for _, m in bounds))

    def fits(deg, vecs) -> bool:
        return all(
            sum(length * n for (length, _), n in zip(shape, vec)) <= deg
            for shape, vec in zip(shapes, vecs)
        )

    def disconnected(deg, vecs) -> Fraction:
        if deg == 0:
            return Fraction(int(not any(any(v) for v in vecs)))
        if not fits(deg, vecs):
            return Fraction(0)
        classes = []
        for shape, vec in zip(shapes, vecs):
            cycles = [length for (length, _), n in zip(shape, vec) for _ in range(n)]
            classes.append(Partition.cycle_type(cycles, deg))
        return _disconnected(deg, g, tuple(classes))

    decorations = list(itertools.product(*(list(vectors(s)) for s in shapes)))
    keys = [(deg, vecs) for deg in range(1, d + 1) for vecs in decorations]
    # Degree-weighted log: deg(m) F_m = sum_{m1 + m2 = m} deg(m1) G_m1 F_m2.
    connected: dict = {}
    for deg, vecs in keys:
        if not fits(deg, vecs):
            connected[(deg, vecs)] = Fraction(0)
            continue
        acc = Fraction(0)
        for deg1 in range(1, deg):
            splits = (list(itertools.product(*(range(n + 1) for n in v))) for v in vecs)
            for vecs1 in itertools.product(*splits):
                g1 = connected.get((deg1, vecs1))
                if not g1:
                    continue
                rest = tuple(tuple(n - n1 for n, n1 in zip(v, v1)) for v, v1 in zip(vecs, vecs1))
                acc += deg1 * g1 * disconnected(deg - deg1, rest)
        connected[(deg, vecs)] = disconnected(deg, vecs) - acc / deg
    full = tuple(tuple(m for _, m in shape) for shape in shapes)
    return connected[(d, full)]


def hurwitz_connected(d: int, g: int, profile: Sequence = ()) -> Fraction:
    """Weighted count of connected covers with the given branch classes.

    Components of a disconnected cover split the degree and may split the
    nontrivial cycles over a single branch point between them.
    """
    return _connected(d, g, _normalize(profile, d))


def simple_profile(cycles: Sequence[int], d: int) -> Partition | None:
    """``cycles`` padded with fixed points, or None when it does not fit in degree d."""
    if sum(cycles) > d:
        return None
    return Partition.cycle_type(cycles, d)


@lru_cache(maxsize=None)
def d_quad(d: int, g: int) -> HurwitzQuad:
    def count(*classes) -> Fraction:
        if any(mu is None for mu in classes):
            return Fraction(0)
        return hurwitz_connected(d, g, classes)

    transposition = simple_profile([2], d)
    D = count(transposition, transposition)
    D2 = count(simple_profile([3], d))
    D3 = count(simple_profile([2, 2], d))
    return HurwitzQuad(d, g, D, D - 3 * D2 - 2 * D3, D2, D3)
