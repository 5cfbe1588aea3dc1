"""``gvlocal`` command-line interface.

    gvlocal tables {etale,local,hurwitz,covers} [--d A..B] [--g A..B] [--h A..B]
    gvlocal check {integrality,congruence-c,...,all} [--d N] [--g N]
    gvlocal cache {build,verify,clear} [--d A..B] [--cache-dir PATH]
    gvlocal fill

Exit status: 0 success, 1 a proven property failed, 2 usage error,
3 a request exceeded the configured budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import checks, tables
from .symgroup import DEFAULT_BUDGET, MAX_DEGREE, BudgetExceeded, CacheError, read_char_table, write_char_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TABLE_DEFAULTS = {
    "etale": {"d": range(2, 6), "g": range(2, 8)},
    "local": {"d": range(2, 6), "g": range(2, 8)},
    "hurwitz": {"d": range(2, 4), "g": range(1, 8)},
    "covers": {"d": range(1, 5), "g": range(1, 7)},
}
CHECK_DEFAULTS = {
    "integrality": {"d": range(1, 7), "g": range(2, 9)},
    "congruence-c": {"d": range(1, 10), "g": range(1, 5)},
    "conjecture216": {"d": range(2, 4), "g": range(2, 7)},
    "aschbacher": {"d": range(1, 7), "g": range(1, 2)},
    "degeneration": {"d": range(2, 5), "g": range(1, 8)},
}


class UsageError(ValueError):
    pass


def parse_range(text: str) -> range:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from exc
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


@dataclass
class RunConfig:
    d: range | None = None
    g: range | None = None
    h: range | None = None
    budget: int = DEFAULT_BUDGET
    cache_dir: Path = Path(".gvlocal-cache")
    format: str = "csv"
    max_degree: int = MAX_DEGREE
    explicit: set = field(default_factory=set)

    def check_bounds(self) -> None:
        if self.d is not None and self.d.stop - 1 > self.max_degree:
            raise BudgetExceeded(
                f"degree {self.d.stop - 1} exceeds the ceiling {self.max_degree}; "
                f"feasible bound: --d {min(self.d.start, self.max_degree)}..{self.max_degree}"
            )
        if self.d is not None and self.d.start < 1:
            raise UsageError("degrees start at 1")
        if self.g is not None and self.g.start < 0:
            raise UsageError("genus must be nonnegative")


def read_config_file(path: Path) -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def make_config(args: argparse.Namespace) -> RunConfig:
    settings: dict[str, str] = {}
    if args.config:
        settings.update(read_config_file(args.config))
    for key in ("d", "g", "h", "budget", "cache_dir", "format", "max_degree"):
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = str(value)
    cfg = RunConfig()
    for key, value in settings.items():
        if key in ("d", "g", "h"):
            setattr(cfg, key, parse_range(value))
            cfg.explicit.add(key)
        elif key in ("budget", "max_degree"):
            setattr(cfg, key, int(value))
        elif key == "cache_dir":
            cfg.cache_dir = Path(value)
        elif key == "format":
            if value not in ("csv", "json", "md"):
                raise UsageError(f"unknown format {value!r}")
            cfg.format = value
        else:
            raise UsageError(f"unknown config key {key!r}")
    return cfg


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", help="degree range, N or A..B")
    p.add_argument("--g", help="genus range, N or A..B")
    p.add_argument("--h", help="genus-shift range, N or A..B")
    p.add_argument("--format", choices=("csv", "json", "md"))
    p.add_argument("--budget", type=int, help="enumeration step cap")
    p.add_argument("--cache-dir", dest="cache_dir")
    p.add_argument("--max-degree", dest="max_degree", type=int)
    p.add_argument("--config", type=Path, help="key=value settings file (flags take precedence)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gvlocal", description="Local GV/BPS invariants of curves, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="emit a table")
    p.add_argument("which", choices=sorted(TABLE_DEFAULTS))
    _common(p)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument("which", choices=checks.SUITES + ("all",))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _common(p)

    p = sub.add_parser("cache", help="manage the character-table cache")
    p.add_argument("action", choices=("build", "verify", "clear"))
    _common(p)

    p = sub.add_parser("fill", help="evaluate the symbolic reference-table entries")
    _common(p)
    return parser


def cmd_tables(args, cfg: RunConfig, out) -> int:
    defaults = TABLE_DEFAULTS[args.which]
    ds = cfg.d or defaults["d"]
    gs = cfg.g or defaults["g"]
    if args.which in ("etale", "local") and gs.start < (2 if args.which == "local" else 1):
        raise UsageError(f"the {args.which} table needs g >= {2 if args.which == 'local' else 1}")
    if args.which == "hurwitz" and gs.start < 1:
        raise UsageError("the hurwitz table needs g >= 1")
    cells = tables.build(args.which, ds, gs, cfg.h)
    out.write(tables.render(args.which, cells, cfg.format))
    return EXIT_OK


def _upto(cfg: RunConfig, key: str, default: range) -> range:
    """A single value N on a check means ``default.start..N``."""
    value = getattr(cfg, key)
    if value is None:
        return default
    if len(value) == 1:
        return range(min(default.start, value.start), value.start + 1)
    return value


def run_suite(name: str, cfg: RunConfig, trials: int = 100, seed: int = 0):
    defaults = CHECK_DEFAULTS.get(name, {"d": range(1, 2), "g": range(1, 2)})
    ds, gs = _upto(cfg, "d", defaults["d"]), _upto(cfg, "g", defaults["g"])
    if name == "integrality":
        return checks.integrality(ds, [g for g in gs if g >= 1])
    if name == "congruence-c":
        return checks.congruence_c(ds.stop - 1, gs)
    if name == "congruence-p":
        return checks.congruence_p()
    if name == "conjecture216":
        return checks.conjecture216(ds, [g for g in gs if g >= 2])
    if name == "aschbacher":
        return checks.aschbacher(ds.stop - 1)
    if name == "degeneration":
        return checks.degeneration(ds, gs)
    if name == "roundtrip":
        return checks.roundtrip(trials=trials, seed=seed)
    if name == "erratum":
        return checks.erratum()
    raise UsageError(f"unknown suite {name!r}")


def cmd_check(args, cfg: RunConfig, out) -> int:
    names = checks.SUITES if args.which == "all" else (args.which,)
    results = []
    for name in names:
        results.extend(run_suite(name, cfg, args.trials, args.seed))
    failed = [r for r in results if not r.passed and r.kind == "assertion"]
    if cfg.format == "json":
        doc = {
            "schema": "gvlocal.check/1",
            "passed": not failed,
            "results": [r.__dict__ for r in results],
        }
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        for r in results:
            tag = "PASS" if r.passed else ("FAIL" if r.kind == "assertion" else "OPEN")
            detail = f"  [{r.detail}]" if r.detail else ""
            out.write(f"{tag} {r.suite}: {r.name}{detail}\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_cache(args, cfg: RunConfig, out) -> int:
    cache_dir = cfg.cache_dir
    if args.action == "build":
        for d in cfg.d or range(1, 7):
            out.write(f"wrote {write_char_table(cache_dir, d)}\n")
        return EXIT_OK
    files = sorted(cache_dir.glob("symd_*.txt")) if cache_dir.is_dir() else []
    if cfg.d is not None:
        files = [f for f in files if f.stem.split("_")[1].isdigit() and int(f.stem.split("_")[1]) in cfg.d]
    if args.action == "clear":
        for f in files:
            f.unlink()
            out.write(f"removed {f}\n")
        return EXIT_OK
    status = EXIT_OK
    for f in files:
        try:
            table = read_char_table(f)
            out.write(f"ok {f} (S_{table.d}, {len(table.classes)} classes)\n")
        except CacheError as exc:
            out.write(f"FAIL {exc}\n")
            status = EXIT_FAIL
    if not files:
        out.write(f"no cache files in {cache_dir}\n")
    return status


def cmd_fill(args, cfg: RunConfig, out) -> int:
    rows = tables.symbolic_fills()
    if cfg.format == "json":
        out.write(json.dumps({"schema": "gvlocal.fill/1", "entries": rows}, indent=2, ensure_ascii=False) + "\n")
    else:
        for row in rows:
            out.write(f"{row['entry']} = {row['value']}    # {row['formula']}\n")
    return EXIT_OK


COMMANDS = {"tables": cmd_tables, "check": cmd_check, "cache": cmd_cache, "fill": cmd_fill}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        cfg.check_bounds()
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        print(f"gvlocal: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"gvlocal: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
