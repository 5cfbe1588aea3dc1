"""Reference values for the étale, local BPS and Hurwitz tables.

Cells that the reference tables leave symbolic are stored as
:class:`AOffset` (``a_{d,g} + offset``); unknown cells are ``UNKNOWN`` and
the single two-branch-point cell at ``d=5, g=2, h=5`` is ``STAR``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .covers import a_count

UNKNOWN = "?"
STAR = "*"


@dataclass(frozen=True)
class AOffset:
    """A cell printed as ``a_{d,g} + offset``."""

    d: int
    g: int
    offset: Fraction

    def evaluate(self) -> Fraction:
        return a_count(self.d, self.g) + self.offset


ETALE = {
    2: {
        2: [-2, 8, 0, 0, 0, 0, 0, 0, 0, 0],
        3: [-8, 4, 31, 0, 0, 0, 0, 0, 0, 0],
        4: [-32, 24, -6, 128, 0, 0, 0, 0, 0, 0],
        5: [-128, 128, -48, 8, 511, 0, 0, 0, 0, 0],
        6: [-512, 640, -320, 80, -10, 2048, 0, 0, 0, 0],
        7: [-2048, 3072, -1920, 640, -120, 12, 8191, 0, 0, 0],
    },
    3: {
        2: [-3, 2, 73, 0, 0, 0, 0, 0],
        3: [-27, 36, -18, 4, 2641, 0, 0, 0],
        4: [-243, 486, -405, 180, -45, 6, 93913, 0],
        5: [-2187, 5832, -6804, 4536, -1890, 504, -84, 8],
        6: [-19683, 65610, -98415, 87480, -51030, 20412, -5670, 1080],
        7: [-177147, 708588, -1299078, 1443420, -1082565, 577368, -224532, 64152],
    },
    4: {
        2: [0, -60, 30, 1315, 0, 0, 0, 0],
        3: [0, 0, -4032, 4032, -1512, 252, 689311, 0],
        4: [0, 0, 0, -261120, 391680, -244800, 81600, -15300],
        5: [0, 0, 0, 0, -16760832, 33521664, -29331456, 14665728],
    },
    5: {
        2: [-5, 10, -7, 2, AOffset(5, 2, Fraction(-1935)), 0, 0, 0],
        3: [-125, 500, -850, 800, -455, 160, -34, 4],
        4: [-3125, 18750, -50625, 81250, -86250, 63750, -33625, 12750],
        5: [-78125, 625000, -2312500, 5250000, -8181250, 9275000, -7910000, 5175000],
    },
}

_ = UNKNOWN
LOCAL = {
    2: {
        2: [-2, 8, 0, _, _, _, _, _, _, _],
        3: [-8, 4, 31, 8, _, _, _, _, _, _],
        4: [-32, 24, -6, 128, 96, _, _, _, _, _],
        5: [-128, 128, -48, 8, 511, 768, _, _, _, _],
        6: [-512, 640, -320, 80, -10, 2048, 5120, _, _, _],
        7: [-2048, 3072, -1920, 640, -120, 12, 8191, 30720, _, _],
    },
    3: {
        2: [-3, 2, 73, 50, _, _, _, _],
        3: [-27, 36, -18, 4, 2641, 9604, _, _],
        4: [-243, 486, -405, 180, -45, 6, 692352, 836310],
        5: [-2187, 5832, -6804, 4536, -1890, 504, -84, 8],
        6: [-19683, 65610, -98415, 87480, -51030, 20412, -5670, 1080],
        7: [-177147, 708588, -1299078, 1443420, -1082565, 577368, -224532, 64152],
    },
    4: {
        2: [0, -60, 30, _, _, _, _, _],
        3: [0, 0, -4032, 3520, _, _, _, _],
        4: [0, 0, 0, -261120, 367104, _, _, _],
        5: [0, 0, 0, 0, -16760832, 32735232, _, _],
    },
    5: {
        2: [-5, 10, -7, 2, AOffset(5, 2, Fraction(-1935)), STAR, _, _],
        3: [-125, 500, -850, 800, -455, 160, -34, 4],
        4: [-3125, 18750, -50625, 81250, -86250, 63750, -33625, 12750],
        5: [-78125, 625000, -2312500, 5250000, -8181250, 9275000, -7910000, 5175000],
    },
}
del _

# Cells where the local table contradicts the étale table inside the range
# where the two must agree; the computed value is kept and the cell flagged.
LOCAL_MISPRINTS = {(3, 4, 6): 692352}

CONNECTED_COVERS = {
    2: [Fraction(3, 2), Fraction(15, 2), Fraction(63, 2), Fraction(255, 2), Fraction(1023, 2), Fraction(4095, 2)],
    3: [
        Fraction(4, 3),
        Fraction(220, 3),
        Fraction(7924, 3),
        Fraction(281740, 3),
        Fraction(10095844, 3),
        Fraction(362968060, 3),
    ],
    4: [
        Fraction(7, 4),
        Fraction(5275, 4),
        Fraction(2757307, 4),
        AOffset(4, 4, Fraction(-408421, 4)),
        AOffset(4, 5, Fraction(-13985413, 4)),
        AOffset(4, 6, Fraction(-492346021, 4)),
    ],
}

HURWITZ_D = {
    2: [2, 8, 32, 128, 512, 2048, 8192],
    3: [16, 640, 23296, 839680, 30232576, 1088389120, 39182073856],
}
HURWITZ_DSTAR = {
    2: [2, 8, 32, 128, 512, 2048, 8192],
    3: [7, 235, 7987, 281995, 10096867, 362972155, 13062280147],
}
HURWITZ_DSTARSTAR = {
    2: [0, 0, 0, 0, 0, 0, 0],
    3: [3, 135, 5103, 185895, 6711903, 241805655, 8706597903],
}


def resolve(cell):
    """Concrete value of a reference cell; ``UNKNOWN`` and ``STAR`` pass through."""
    if isinstance(cell, AOffset):
        return cell.evaluate()
    if cell in (UNKNOWN, STAR):
        return cell
    return Fraction(cell)
