"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its runtime; all
comparisons are exact.  Run ``python tests/test_acceptance.py`` for the
report alone.
"""

import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gvlocal import reference  # noqa: E402
from gvlocal.bps import (  # noqa: E402
    GvSeries,
    CellStatus,
    etale_bps,
    etale_gw_forward,
    gv_forward,
    gv_invert,
    local_bps,
    tilde_N,
    upsilon_check,
    xi_check,
)
from gvlocal.chebyshev import p_poly  # noqa: E402
from gvlocal.covers import a_count, cover_counts, d_quad, hurwitz_connected  # noqa: E402
from gvlocal.series import Polynomial  # noqa: E402
from gvlocal.symgroup import Partition, brute_count, commutator_class_count, partitions  # noqa: E402
from gvlocal.tables import build  # noqa: E402


def _report(number, title, limit, fn):
    start = time.perf_counter()
    failures = fn()
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        failures.append(f"runtime {elapsed:.1f}s over {limit}s")
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number}: {title} ({elapsed:.2f}s)"
    if failures:
        line += " -- " + "; ".join(map(str, failures[:5]))
    print(line, file=sys.__stdout__, flush=True)
    return failures


def etale_table():
    failures = []
    cells = build("etale", [2, 3, 4, 5], range(2, 8), range(0, 10))
    got = {(c.d, c.g, c.key): c.value for c in cells}
    for d, rows in reference.ETALE.items():
        for g, row in rows.items():
            for h, cell in enumerate(row):
                if got[(d, g, h)] != reference.resolve(cell):
                    failures.append((d, g, h, got[(d, g, h)], cell))
    if a_count(5, 2) != 32152:
        failures.append(("a_52", a_count(5, 2)))
    if brute_count(5, 2) != a_count(5, 2):
        failures.append(("a_52 brute force", brute_count(5, 2)))
    if got[(5, 2, 4)] != a_count(5, 2) - 1935:
        failures.append(("symbolic cell", got[(5, 2, 4)]))
    return failures


def covers_table():
    failures = []
    for d, row in reference.CONNECTED_COVERS.items():
        for g, cell in enumerate(row, start=1):
            C = cover_counts(d, g)[d - 1].C
            if C != reference.resolve(cell):
                failures.append(("C", d, g, C))
    for g, offset in ((4, 408421), (5, 13985413), (6, 492346021)):
        if cover_counts(4, g)[3].C != a_count(4, g) - Fraction(offset, 4):
            failures.append(("C4 identity", g))
    for table, attr in (
        (reference.HURWITZ_D, "D"),
        (reference.HURWITZ_DSTAR, "Dstar"),
        (reference.HURWITZ_DSTARSTAR, "Dstarstar"),
    ):
        for d, row in table.items():
            for g, value in enumerate(row, start=1):
                if getattr(d_quad(d, g), attr) != value:
                    failures.append((attr, d, g))
    return failures


def local_table():
    failures = []
    for d, rows in reference.LOCAL.items():
        for g, row in rows.items():
            for h, cell in enumerate(row):
                got = local_bps(d, g, h)
                if cell == reference.UNKNOWN:
                    continue
                if cell == reference.STAR:
                    if got.status is not CellStatus.KNOWN:
                        failures.append(("star", d, g, h))
                    continue
                expected = reference.resolve(cell)
                if (d, g, h) in reference.LOCAL_MISPRINTS:
                    expected = etale_bps(d, g)[h + g - 1]
                if got.value != expected:
                    failures.append((d, g, h, got.value, cell))
    named = {(3, 2, 3): 50, (3, 3, 5): 9604, (3, 4, 7): 836310, (4, 3, 3): 3520,
             (4, 4, 4): 367104, (4, 5, 5): 32735232, (3, 4, 6): 93913}
    for (d, g, h), value in named.items():
        if local_bps(d, g, h).value != value:
            failures.append(("named", d, g, h))
    if [tilde_N(2, g) for g in range(2, 8)] != [0, 8, 96, 768, 5120, 30720]:
        failures.append("d=2 column")
    flagged = [c for c in build("local", [3], [4], [6]) if "692352" in c.provenance]
    if len(flagged) != 1:
        failures.append("misprint not flagged")
    return failures


def integrality():
    failures = []
    for d in range(1, 7):
        for g in range(1, 9):
            poly = etale_bps(d, g)
            xi = xi_check(d, g)
            if not poly.is_integral() or any(int(c) % d for c in xi.coefficients):
                failures.append((d, g))
    return failures


def congruences():
    failures = []
    for p in (2, 3, 5):
        for l in (1, 2, 3):
            for b in (1, 2):
                lhs = p_poly(p).poly ** (p ** (l - 1) * b)
                rhs = Polynomial.monomial(p**l * b)
                if any((lhs[i] - rhs[i]) % p**l for i in range(lhs.degree + 1)):
                    failures.append(("P", p, l, b))
    for g in range(1, 5):
        c = {cc.d: int(cc.c) for cc in cover_counts(9, g)}
        for hi, lo, m in ((4, 2, 4), (9, 3, 9), (6, 3, 2), (6, 2, 3)):
            if (c[hi] - c[lo]) % m:
                failures.append(("c", g, hi, lo, m))
    for p in (2, 3, 5):
        for l in range(2, 7):
            for k in range(1, l):
                if math.comb(p ** (l - 1), k) % p ** (l - k):
                    failures.append(("binomial", p, l, k))
    for p in (2, 3):
        for l in (1, 2, 3):
            for x in range(-3, 4):
                lhs = Polynomial([x, 1]) ** (p**l)
                rhs = (Polynomial.monomial(p) + Polynomial([x**p])) ** (p ** (l - 1))
                if any((lhs[i] - rhs[i]) % p**l for i in range(lhs.degree + 1)):
                    failures.append(("binomial power", p, l, x))
    return failures


def conjecture216():
    failures = []
    for d in (2, 3):
        for g in range(2, 7):
            report = upsilon_check(d, g)
            if not report.passes:
                failures.append((d, g, report.value % 216))
    report = upsilon_check(5, 2)
    print(f"     d=5 g=2: Upsilon={report.value}, residue mod 216 = {report.value % 216}", file=sys.__stdout__)
    return failures


def oracle_equivalence():
    failures = []
    for d in range(1, 5):
        for g in range(0, 3):
            if brute_count(d, g) != a_count(d, g):
                failures.append(("a", d, g))
            for cycles in ([], [[2], [2]], [[3]], [[2, 2]]):
                if any(sum(c) > d for c in cycles):
                    continue
                profile = [Partition.cycle_type(c, d) for c in cycles]
                if brute_count(d, g, profile, transitive_only=True) != hurwitz_connected(d, g, profile):
                    failures.append((d, g, cycles))
    return failures


def roundtrip():
    failures = []
    rng = random.Random(2024)
    for trial in range(100):
        g = rng.randint(0, 5)
        entries = {(d, h): rng.randint(-100, 100) for d in range(1, 7) for h in range(9)}
        n = GvSeries(g, "BPS", 6, 8, entries)
        if gv_invert(gv_forward(n)) != n:
            failures.append(("random", trial))
    for g in range(1, 6):
        h_max = 4 * (g - 1) + 2
        bps = gv_invert(etale_gw_forward(5, g, h_max))
        for d in range(1, 6):
            poly = etale_bps(d, g)
            if any(bps[(d, h)] != poly[h + g - 1] for h in range(h_max + 1)):
                failures.append(("pipeline", d, g))
    return failures


def degeneration_and_divisibility():
    failures = []
    for d in range(1, 6):
        for g in range(1, 8):
            q = d_quad(d, g)
            if q.D != q.Dstar + 3 * q.Dstarstar + 2 * q.Dstarstarstar:
                failures.append(("eq", d, g))
    for d in range(1, 7):
        for mu in partitions(d):
            if commutator_class_count(d, mu) % math.factorial(d):
                failures.append(("beta", d, mu))
    return failures


CRITERIA = [
    (1, "étale table incl. a_{5,2} by character sum and brute force", 10 + 600, etale_table),
    (2, "connected covers and Hurwitz numbers D, D*, D**", 30, covers_table),
    (3, "local BPS table in its known range, misprint flagged", 60, local_table),
    (4, "étale integrality and Xi = 0 mod d, d <= 6, g <= 8", 60, integrality),
    (5, "congruence suites for P_p, c_{d,g} and binomials", 30, congruences),
    (6, "Upsilon integral and 0 mod 216 for d = 2, 3, g <= 6", 300, conjecture216),
    (7, "brute force equals character sums, d <= 4, g <= 2", 300, oracle_equivalence),
    (8, "round trip and étale pipeline identities", 60, roundtrip),
    (9, "degeneration relation and d! | beta_k, d <= 6", 60, degeneration_and_divisibility),
]


@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn):
    failures = _report(number, title, limit, fn)
    assert not failures, failures


if __name__ == "__main__":
    bad = sum(bool(_report(*c)) for c in CRITERIA)
    sys.exit(1 if bad else 0)
