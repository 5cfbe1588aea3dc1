"""Assemble the étale, local, Hurwitz and cover tables and serialize them."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import reference
from .bps import CellStatus, d_min, etale_bps, local_bps
from .covers import a_count, cover_counts, d_quad

SCHEMA = "gvlocal.table/1"


def fmt_rational(x: Fraction | int | None) -> str:
    if x is None:
        return "?"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Cell:
    d: int
    g: int
    key: int | str  # genus shift h for BPS tables, quantity name otherwise
    value: Fraction | None
    status: str
    provenance: str = ""


def _a_note(d: int, g: int, offset: Fraction) -> str:
    return f"a_{{{d},{g}}} {'+' if offset >= 0 else '-'} {fmt_rational(abs(offset))} with a_{{{d},{g}}} = {a_count(d, g)}"


def _etale_provenance(d: int, g: int, h: int) -> str:
    ref = reference.ETALE.get(d, {}).get(g)
    if ref is not None and h < len(ref) and isinstance(ref[h], reference.AOffset):
        return "étale formula; " + _a_note(d, g, ref[h].offset)
    return "étale formula"


def default_h(d: int, g: int, local: bool) -> range:
    top = (d - 1) * (g - 1) + (1 if local else 0)
    return range(0, top + 1)


def etale_cells(ds: Iterable[int], gs: Sequence[int], hs: Sequence[int] | None = None) -> list[Cell]:
    cells = []
    for d in ds:
        for g in gs:
            poly = etale_bps(d, g)
            for h in hs if hs is not None else default_h(d, g, False):
                cells.append(Cell(d, g, h, poly[h + g - 1], CellStatus.ETALE.value, _etale_provenance(d, g, h)))
    return cells


def local_cells(ds: Iterable[int], gs: Sequence[int], hs: Sequence[int] | None = None) -> list[Cell]:
    cells = []
    for d in ds:
        for g in gs:
            for h in hs if hs is not None else default_h(d, g, True):
                cell = local_bps(d, g, h)
                if cell.status is CellStatus.UNKNOWN:
                    dm = d_min(d)
                    cells.append(Cell(d, g, h, None, cell.status.value, f"beyond h <= {(dm - 1) * (g - 1) + 1}"))
                    continue
                note = cell.note.replace("étale", _etale_provenance(d, g, h), 1)
                printed = reference.LOCAL_MISPRINTS.get((d, g, h))
                if printed is not None:
                    note += f"; reference table prints {printed}, inconsistent with the étale value (suspected misprint)"
                cells.append(Cell(d, g, h, cell.value, cell.status.value, note))
    return cells


def hurwitz_cells(ds: Iterable[int], gs: Sequence[int]) -> list[Cell]:
    cells = []
    for d in ds:
        for g in gs:
            q = d_quad(d, g)
            cells += [
                Cell(d, g, "D", q.D, "exact", "connected character sum, two simple branch points"),
                Cell(d, g, "D*", q.Dstar, "exact", "D - 3 D** - 2 D***"),
                Cell(d, g, "D**", q.Dstarstar, "exact", "connected character sum, one 3-cycle"),
                Cell(d, g, "D***", q.Dstarstarstar, "exact", "connected character sum, two 2-cycles"),
            ]
    return cells


def covers_cells(ds: Sequence[int], gs: Sequence[int]) -> list[Cell]:
    cells = []
    for g in gs:
        counts = cover_counts(max(ds), g)
        for d in ds:
            cc = counts[d - 1]
            note = "log of the a-series, checked against the c-recursion"
            ref = reference.CONNECTED_COVERS.get(d)
            if ref is not None and 1 <= g <= len(ref) and isinstance(ref[g - 1], reference.AOffset):
                note += "; " + _a_note(d, g, ref[g - 1].offset)
            cells += [
                Cell(d, g, "A", cc.A, "exact", "#Hom(pi_1, S_d) by character sum"),
                Cell(d, g, "a", cc.a, "exact", "A / d!"),
                Cell(d, g, "C", cc.C, "exact", note),
                Cell(d, g, "c", cc.c, "exact", "d * C"),
            ]
    cells.sort(key=lambda c: (c.d, c.g))
    return cells


def build(which: str, ds, gs, hs=None) -> list[Cell]:
    ds, gs = list(ds), list(gs)
    if which == "etale":
        return etale_cells(ds, gs, hs)
    if which == "local":
        return local_cells(ds, gs, hs)
    if which == "hurwitz":
        return hurwitz_cells(ds, gs)
    if which == "covers":
        return covers_cells(ds, gs)
    raise ValueError(f"unknown table {which!r}")


def _key_name(cells: Sequence[Cell]) -> str:
    return "h" if cells and isinstance(cells[0].key, int) else "quantity"


def to_csv(cells: Sequence[Cell]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "g", _key_name(cells), "value", "status"])
    for c in cells:
        writer.writerow([c.d, c.g, c.key, fmt_rational(c.value), c.status])
    return buf.getvalue()


def to_json(which: str, cells: Sequence[Cell]) -> str:
    key = _key_name(cells)
    doc = {
        "schema": SCHEMA,
        "table": which,
        "cells": [
            {
                "d": c.d,
                "g": c.g,
                key: c.key,
                "value": fmt_rational(c.value),
                "status": c.status,
                "provenance": c.provenance,
            }
            for c in cells
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_markdown(which: str, cells: Sequence[Cell]) -> str:
    if not cells:
        return ""
    key = _key_name(cells)
    lines = []
    if key == "h":
        hs = sorted({c.key for c in cells})
        for d in sorted({c.d for c in cells}):
            lines.append(f"### {which} d={d}\n")
            lines.append("| g | " + " | ".join(f"h={h}" for h in hs) + " |")
            lines.append("|---" * (len(hs) + 1) + "|")
            for g in sorted({c.g for c in cells if c.d == d}):
                row = {c.key: fmt_rational(c.value) for c in cells if c.d == d and c.g == g}
                lines.append(f"| {g} | " + " | ".join(row.get(h, "") for h in hs) + " |")
            lines.append("")
    else:
        gs = sorted({c.g for c in cells})
        names = list(dict.fromkeys(c.key for c in cells))
        for name in names:
            lines.append(f"### {name}\n")
            lines.append("| d | " + " | ".join(f"g={g}" for g in gs) + " |")
            lines.append("|---" * (len(gs) + 1) + "|")
            for d in sorted({c.d for c in cells}):
                row = {c.g: fmt_rational(c.value) for c in cells if c.d == d and c.key == name}
                lines.append(f"| {d} | " + " | ".join(row.get(g, "") for g in gs) + " |")
            lines.append("")
    return "\n".join(lines)


def render(which: str, cells: Sequence[Cell], fmt: str) -> str:
    if fmt == "csv":
        return to_csv(cells)
    if fmt == "json":
        return to_json(which, cells)
    if fmt == "md":
        return to_markdown(which, cells)
    raise ValueError(f"unknown format {fmt!r}")


def symbolic_fills() -> list[dict]:
    """Concrete values for the cells the reference tables leave symbolic."""
    out = []
    a52 = a_count(5, 2)
    out.append({"entry": "a_{5,2}", "value": str(a52), "formula": "sum over irreducibles of S_5 of (5!/dim)^2"})
    out.append(
        {
            "entry": "n_5^4(2)^et",
            "value": fmt_rational(etale_bps(5, 2)[5]),
            "formula": f"a_{{5,2}} - 1935 = {a52} - 1935",
        }
    )
    for g, offset in ((4, Fraction(-408421, 4)), (5, Fraction(-13985413, 4)), (6, Fraction(-492346021, 4))):
        a = a_count(4, g)
        C = cover_counts(4, g)[-1].C
        out.append({"entry": f"a_{{4,{g}}}", "value": str(a), "formula": f"sum over irreducibles of S_4 of (4!/dim)^{2 * g - 2}"})
        out.append(
            {
                "entry": f"C_{{4,{g}}}",
                "value": fmt_rational(C),
                "formula": f"a_{{4,{g}}} - {fmt_rational(-offset)}; identity holds: {C == a + offset}",
            }
        )
    q = d_quad(5, 2)
    star = local_bps(5, 2, 5).value
    out.append(
        {
            "entry": "n_5^5(2)",
            "value": fmt_rational(star),
            "formula": f"(1/8)(D - D* - D**/27) with D={q.D}, D*={q.Dstar}, D**={q.Dstarstar}",
        }
    )
    return out
