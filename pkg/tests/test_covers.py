import itertools
import math
import os
from fractions import Fraction

import pytest

from gvlocal import reference
from gvlocal.covers import (
    ConsistencyError,
    CoverCounts,
    HurwitzQuad,
    a_count,
    cover_counts,
    d_quad,
    hurwitz_connected,
    hurwitz_disconnected,
)
from gvlocal.series import DomainError
from gvlocal.symgroup import Partition, brute_count, symmetric_group

F = Fraction
P = Partition


def test_a_count_examples():
    assert [a_count(1, g) for g in range(5)] == [1] * 5
    assert a_count(2, 2) == 8
    assert a_count(5, 2) == 32152
    assert a_count(3, 0) == F(1, 6)


def test_cover_counts_examples():
    assert cover_counts(2, 2)[1].C == F(15, 2)
    assert cover_counts(3, 4)[2].C == F(281740, 3)
    assert cover_counts(4, 2)[3].C == F(5275, 4)


def test_cover_counts_invariants():
    for g in range(1, 6):
        for cc in cover_counts(6, g):
            assert cc.a * math.factorial(cc.d) == cc.A
            assert cc.c == cc.d * cc.C and cc.c.denominator == 1
    with pytest.raises(ConsistencyError):
        CoverCounts(2, 2, 16, 7, F(15, 2), 15)
    with pytest.raises(ConsistencyError):
        CoverCounts(2, 2, 16, 8, F(15, 2), 14)


@pytest.mark.parametrize("g", range(1, 9))
def test_double_covers_closed_form(g):
    assert cover_counts(2, g)[1].C == F(2 ** (2 * g) - 1, 2)


@pytest.mark.parametrize("g", range(1, 8))
def test_simple_double_covers(g):
    assert d_quad(2, g).D == 2 ** (2 * g - 1)


def test_reference_cover_values():
    for d, row in reference.CONNECTED_COVERS.items():
        for g, cell in enumerate(row, start=1):
            assert cover_counts(d, g)[d - 1].C == reference.resolve(cell)


@pytest.mark.parametrize(
    "g,offset", [(4, F(-408421, 4)), (5, F(-13985413, 4)), (6, F(-492346021, 4))]
)
def test_symbolic_degree_four_identities(g, offset):
    assert cover_counts(4, g)[3].C - a_count(4, g) == offset


@pytest.mark.parametrize("g", range(1, 5))
def test_prime_power_congruences(g):
    c = {cc.d: int(cc.c) for cc in cover_counts(9, g)}
    assert (c[4] - c[2]) % 4 == 0
    assert (c[9] - c[3]) % 9 == 0
    assert (c[6] - c[3]) % 2 == 0
    assert (c[6] - c[2]) % 3 == 0
    for p in (2, 3, 5, 7):
        for k in range(1, 10):
            if k % p and p * k <= 9:
                assert (c[p * k] - c[k]) % p == 0


def test_hurwitz_disconnected_examples():
    t = P([2, 1])
    assert hurwitz_disconnected(3, 2) == a_count(3, 2)
    assert hurwitz_disconnected(3, 1, [t, t]) == 18
    assert hurwitz_disconnected(2, 3, [P([2]), P([2])]) == 32
    with pytest.raises(DomainError):
        hurwitz_disconnected(3, 1, [P([2])])


def test_hurwitz_connected_examples():
    t = P([2, 1])
    assert hurwitz_connected(3, 1, [t, t]) == 16
    assert hurwitz_connected(3, 2, [t, t]) == 640
    assert hurwitz_connected(3, 1, [P([3])]) == 3


def test_d_quad_examples():
    assert d_quad(2, 5) == HurwitzQuad(2, 5, F(512), F(512), F(0), F(0))
    assert d_quad(3, 1).Dstar == 7
    assert d_quad(3, 7).Dstar == 13062280147


def test_hurwitz_reference_tables():
    for table, attr in (
        (reference.HURWITZ_D, "D"),
        (reference.HURWITZ_DSTAR, "Dstar"),
        (reference.HURWITZ_DSTARSTAR, "Dstarstar"),
    ):
        for d, row in table.items():
            for g, value in enumerate(row, start=1):
                assert getattr(d_quad(d, g), attr) == value


def test_degeneration_relation_enforced():
    with pytest.raises(ConsistencyError):
        HurwitzQuad(3, 1, F(16), F(8), F(3), F(0))
    with pytest.raises(ConsistencyError):
        HurwitzQuad(2, 1, F(5), F(2), F(1), F(0))


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("g", range(0, 3))
def test_connected_equals_transitive_brute_force(d, g):
    shapes = [[], [[2], [2]], [[3]], [[2, 2]]]
    for cycles in shapes:
        if any(sum(c) > d for c in cycles):
            continue
        profile = [P.cycle_type(c, d) for c in cycles]
        assert brute_count(d, g, profile, transitive_only=True) == hurwitz_connected(d, g, profile)


def _surface_tuples(G, g):
    """All ``(x1, y1, ..., xg, yg)`` with trivial product of commutators."""
    if g == 1:
        for x in range(G.order):
            for y in G.commutator_solutions(x, G.identity):
                yield (x, y)
    elif g == 2:
        for x1, y1, x2 in itertools.product(range(G.order), repeat=3):
            target = G.inv[G.comm[x1][y1]]
            for y2 in G.commutator_solutions(x2, target):
                yield (x1, y1, x2, y2)
    else:
        raise ValueError(g)


def nodal_count(d, g):
    """Covers with one node over a fixed point, counted via their normalization.

    The normalization is an étale cover (a surface-group tuple) with two of
    the d sheets over the point glued; the result is connected iff the tuple
    together with the transposition of those sheets acts transitively.
    """
    G = symmetric_group(d)
    swaps = []
    for a, b in itertools.combinations(range(d), 2):
        perm = list(range(d))
        perm[a], perm[b] = b, a
        swaps.append(G.index[tuple(perm)])
    hits = sum(G.transitive([*gens, s]) for gens in _surface_tuples(G, g) for s in swaps)
    return F(hits, G.order)


@pytest.mark.parametrize("d", range(2, 5))
@pytest.mark.parametrize("g", [1, 2])
def test_nodal_oracle_matches_degeneration(d, g):
    assert nodal_count(d, g) == d_quad(d, g).Dstar


def test_genus_zero_is_rational():
    assert a_count(4, 0) == F(1, 24)
    assert hurwitz_connected(2, 0, [P([2]), P([2])]) == F(1, 2)
    assert brute_count(2, 0, [P([2]), P([2])], transitive_only=True) == F(1, 2)


@pytest.mark.skipif(not os.environ.get("GVLOCAL_SLOW"), reason="about 3 minutes; set GVLOCAL_SLOW=1")
def test_degree_five_simple_branching_by_brute_force():
    t = P([2, 1, 1, 1])
    assert brute_count(5, 2, [t, t], transitive_only=True) == d_quad(5, 2).D == 2882560
