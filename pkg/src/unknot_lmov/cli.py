"""Command-line tables and verification runs.

    unknot-lmov genus0 --tau 1 --max-m 6
    unknot-lmov pair --tau -2 --max-m 5 --format csv
    unknot-lmov bps --tau 2 --m 3 --format json
    unknot-lmov extremal --p -3 --max-r 10
    unknot-lmov verify --suite all

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 theorem violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .invariants import TheoremViolation, bps_table, gks_extremal, n_ml, n_pair, resolve_charge_convention
from .laurent import format_half, format_rational, parse_rational
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3
FORMATS = ("pretty", "json", "csv")
NON_INTEGRAL = "non-integral"

COLUMNS = {
    "genus0": ["m", "l", "n"],
    "pair": ["m1", "m2", "n"],
    "bps": ["g", "Q2", "n"],
    "extremal": ["p", "r", "sign", "b"],
    "verify": ["suite", "passed", "cases_run", "skipped", "failures"],
}


@dataclass
class RunConfig:
    command: str
    tau: int = 0
    max_m: int = 4
    max_l: int | None = None
    max_r: int = 10
    p: int | None = None
    m: int = 1
    format: str = "pretty"
    seed: int | None = None
    samples: int = 0
    jobs: int = 1
    suites: list[str] = field(default_factory=lambda: ["all"])
    timing: bool = False

    def validate(self) -> None:
        if self.command not in COLUMNS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        for name in ("max_m", "max_r", "m", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if self.max_l is not None and self.max_l < 0:
            raise ValueError("--max-l must be nonnegative")
        if self.samples < 0:
            raise ValueError("--samples must be nonnegative")
        if self.command == "extremal":
            if self.p is None:
                raise ValueError("extremal needs --p")
            if not (self.p <= -1 or self.p >= 2):
                raise ValueError(f"--p {self.p} is in neither regime (need p <= -1 or p >= 2)")
        if self.command == "verify":
            for s in self.suites:
                if s != "all" and s not in SUITES:
                    raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
        if self.samples and self.seed is None:
            raise ValueError("--samples needs --seed")


def _value(v):
    """Plain int when integral; otherwise ``num/den`` plus a flag."""
    if type(v) is int:
        return v, None
    return format_rational(v), NON_INTEGRAL


def _cell_row(keys: dict, name: str, v) -> dict:
    value, flag = _value(v)
    row = {**keys, name: value}
    if flag:
        row["flag"] = flag
    return row


def _genus0_cell(args: tuple[int, int, int]) -> dict:
    m, l, tau = args
    return _cell_row({"m": m, "l": l}, "n", n_ml(m, l, tau))


def _pair_cell(args: tuple[int, int, int]) -> dict:
    m1, m2, tau = args
    return _cell_row({"m1": m1, "m2": m2}, "n", n_pair(m1, m2, tau))


def _extremal_cell(args: tuple[int, int, str]) -> dict:
    p, r, sign = args
    return _cell_row({"p": p, "r": r, "sign": sign}, "b", gks_extremal(p, r, sign))


def _map(fn: Callable, cells: list, jobs: int) -> list:
    # Order-preserving either way, so output does not depend on --jobs.
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(fn, cells, chunksize=max(1, len(cells) // (8 * jobs))))
    return [fn(c) for c in cells]


def _meta(config: RunConfig, **extra) -> dict:
    meta = {"command": config.command, "tau": config.tau, "orientation": None, "seed": config.seed}
    meta.update(extra)
    return meta


def build(config: RunConfig) -> tuple[dict, list[dict], int]:
    """``(meta, rows, exit_status)`` for a validated config."""
    cmd = config.command
    if cmd == "genus0":
        top = config.max_l
        cells = [
            (m, l, config.tau)
            for m in range(1, config.max_m + 1)
            for l in range(0, (m if top is None else min(m, top)) + 1)
        ]
        return _meta(config, max_m=config.max_m, max_l=top), _map(_genus0_cell, cells, config.jobs), EXIT_OK
    if cmd == "pair":
        cells = [(m1, m2, config.tau) for m1 in range(1, config.max_m + 1) for m2 in range(1, m1 + 1)]
        return _meta(config, max_m=config.max_m), _map(_pair_cell, cells, config.jobs), EXIT_OK
    if cmd == "bps":
        convention = resolve_charge_convention()
        table = bps_table(config.m, config.tau)
        rows = [_cell_row({"g": g, "Q2": q2}, "n", n) for (g, q2), n in sorted(table.entries.items())]
        return _meta(config, m=config.m, orientation=str(convention)), rows, EXIT_OK
    if cmd == "extremal":
        cells = [(config.p, r, s) for r in range(1, config.max_r + 1) for s in ("-", "+")]
        meta = _meta(config, p=config.p, max_r=config.max_r)
        return meta, _map(_extremal_cell, cells, config.jobs), EXIT_OK
    reports = run_suites(config.suites, seed=config.seed, samples=config.samples, jobs=config.jobs)
    rows = [r.to_dict(timing=config.timing) for r in reports]
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY
    return _meta(config, suites=list(config.suites), samples=config.samples), rows, status


def _csv_row(command: str, row: dict) -> dict:
    if command == "verify":
        return {**{k: row[k] for k in COLUMNS["verify"][:-1]}, "failures": len(row["failures"])}
    return row


def _meta_text(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render(command: str, meta: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "rows": rows}, sort_keys=True, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        header = " ".join(f"{k}={_meta_text(v)}" for k, v in meta.items())
        buf.write(f"# {header}\n")
        cols = COLUMNS[command] + ([] if command == "verify" else ["flag"])
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", restval="")
        writer.writeheader()
        for row in rows:
            writer.writerow(_csv_row(command, row))
        return buf.getvalue()
    return _pretty(command, meta, rows)


def _pretty(command: str, meta: dict, rows: list[dict]) -> str:
    lines = ["# " + ", ".join(f"{k}: {v}" for k, v in meta.items() if v is not None)]
    if command == "verify":
        for r in rows:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(
                f"{status} {r['suite']}: {r['cases_run']} cases, {r['skipped']} skipped, "
                f"{len(r['failures'])} failures"
            )
            for f in r["failures"][:5]:
                lines.append(f"    {f['relation']} at {json.dumps(f['case'], sort_keys=True)}: "
                             f"{json.dumps(f['observed'], sort_keys=True)}")
            if len(r["failures"]) > 5:
                lines.append(f"    ... {len(r['failures']) - 5} more")
        return "\n".join(lines) + "\n"
    cols = list(COLUMNS[command])
    shown = []
    for row in rows:
        cells = dict(row)
        if command == "bps":
            cells["Q2"] = format_half(row["Q2"])
        shown.append([str(cells.get(c, "")) + ("  *" if c == cols[-1] and row.get("flag") else "") for c in cols])
    if command == "bps":
        cols[1] = "Q"
    widths = [max([len(c)] + [len(r[i]) for r in shown]) for i, c in enumerate(cols)]
    lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
    for r in shown:
        lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)))
    if any(row.get("flag") for row in rows):
        lines.append("* non-integral value")
    return "\n".join(lines) + "\n"


def parse_output(text: str, fmt: str) -> tuple[dict, list[dict]]:
    """Read back JSON or CSV output; ``num/den`` strings become exact rationals."""
    if fmt == "json":
        doc = json.loads(text)
        meta, rows = doc["meta"], doc["rows"]
    elif fmt == "csv":
        lines = text.splitlines()
        meta = {}
        if lines and lines[0].startswith("# "):
            for item in lines[0][2:].split(" "):
                k, _, v = item.partition("=")
                meta[k] = v
            lines = lines[1:]
        rows = [dict(r) for r in csv.DictReader(lines)]
    else:
        raise ValueError("only json and csv output can be parsed")
    out = []
    for row in rows:
        clean = {}
        for k, v in row.items():
            if k in ("flag", "sign", "suite") or v == "" or isinstance(v, (bool, list, dict)) or v is None:
                clean[k] = v
            elif v in ("True", "False"):
                clean[k] = v == "True"
            else:
                clean[k] = parse_rational(v)
        out.append(clean)
    return meta, out


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unknot-lmov", description="LMOV invariants of the framed unknot.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, tau: bool = True) -> None:
        if tau:
            p.add_argument("--tau", type=int, default=0, help="framing")
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("genus0", help="genus-0 invariants n_{m,l}")
    common(p)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-l", type=int, default=None)

    p = sub.add_parser("pair", help="two-part boundary invariants n_{(m1,m2)}")
    common(p)
    p.add_argument("--max-m", type=int, default=4)

    p = sub.add_parser("bps", help="full (g, Q) table of z^2 g_m")
    common(p)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("extremal", help="extremal invariants of twist knots")
    common(p, tau=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-r", type=int, default=10)

    p = sub.add_parser("verify", help="run verification suites")
    common(p, tau=False)
    p.add_argument("--suite", action="append", dest="suites", help=f"one of {', '.join(SUITES)} or all (repeatable)")
    p.add_argument("--samples", type=int, default=0, help="extra seeded random cases per suite")
    p.add_argument("--timing", action="store_true", help="include wall time (output no longer reproducible)")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        tau=getattr(ns, "tau", 0),
        max_m=getattr(ns, "max_m", 4),
        max_l=getattr(ns, "max_l", None),
        max_r=getattr(ns, "max_r", 10),
        p=getattr(ns, "p", None),
        m=getattr(ns, "m", 1),
        format=ns.format,
        seed=ns.seed,
        samples=getattr(ns, "samples", 0),
        jobs=ns.jobs,
        suites=getattr(ns, "suites", None) or ["all"],
        timing=getattr(ns, "timing", False),
    )


def run(config: RunConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        config.validate()
    except ValueError as exc:
        print(f"unknot-lmov: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        meta, rows, status = build(config)
    except TheoremViolation as exc:
        print(f"unknot-lmov: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    out.write(render(config.command, meta, rows, config.format))
    return status


def main(argv: Sequence[str] | None = None) -> int:
    ns = make_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
