"""Exact local Gopakumar-Vafa / BPS invariants of curves in Calabi-Yau threefolds.

Everything is computed in exact rational arithmetic: truncated power series,
the polynomials ``P_k``, symmetric-group characters, Hurwitz and cover
counts, and the GV transforms built on them.
"""

from .bps import (
    CellStatus,
    GvSeries,
    alpha,
    d_min,
    epsilon,
    etale_bps,
    etale_bps_values,
    etale_gw_forward,
    gv_forward,
    gv_invert,
    local_bps,
    tilde_N,
    upsilon_check,
)
from .chebyshev import p_coefficient, p_poly
from .covers import (
    ConsistencyError,
    a_count,
    connected_cover_count,
    cover_counts,
    d_quad,
    hurwitz_connected,
    hurwitz_disconnected,
)
from .series import DomainError, Polynomial, PowerSeries
from .symgroup import BudgetExceeded, CacheError, Partition, brute_count, char_table, partitions

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CacheError",
    "CellStatus",
    "ConsistencyError",
    "DomainError",
    "GvSeries",
    "Partition",
    "Polynomial",
    "PowerSeries",
    "a_count",
    "alpha",
    "brute_count",
    "char_table",
    "connected_cover_count",
    "cover_counts",
    "d_min",
    "d_quad",
    "epsilon",
    "etale_bps",
    "etale_bps_values",
    "etale_gw_forward",
    "gv_forward",
    "gv_invert",
    "hurwitz_connected",
    "hurwitz_disconnected",
    "local_bps",
    "p_coefficient",
    "p_poly",
    "partitions",
    "tilde_N",
    "upsilon_check",
]
