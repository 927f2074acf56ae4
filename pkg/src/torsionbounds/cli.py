"""Command-line entry point.

    torsionbounds verify   [--seed N] [--samples N] [--tol X] [--out PATH]
    torsionbounds bounds4  [--grid-from C0 --grid-to C1 --grid-step DC] [--format csv|json]
    torsionbounds bounds5  [--grid-from S0 --grid-to S1 --grid-step DS]
    torsionbounds hopf     [--k K] [--grid-from A0 --grid-to A1 (--grid-step DA | --grid-points N)]
    torsionbounds spectrum [--n N] [--torsion "125:2,345:2"]

Every subcommand also reads ``--config PATH``, a file of ``key = value``
lines using the long option names; explicit flags override it.

Exit status: 0 on success (all checks pass), 1 if a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, fields
from typing import Any, Sequence

import numpy as np

from . import bounds as B
from . import hopf as H
from .clifford import TOL_ALG, build_spinor_rep
from .eigenbundles import reachable_eigenvalues, split_spinors
from .forms import AltForm
from .verify import run_verify

COMMANDS = ("verify", "bounds4", "bounds5", "hopf", "spectrum")

DEFAULT_GRIDS = {
    "bounds4": (0.05, 3.0, 0.005),
    "bounds5": (-3.9, 100.0, 0.1),
    "hopf": (1.001, 6.0, None),
}
HOPF_DEFAULT_POINTS = 400


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    out: str | None = None
    format: str = "csv"
    seed: int = 0
    samples: int = 200
    grid_from: float | None = None
    grid_to: float | None = None
    grid_step: float | None = None
    grid_points: int | None = None
    k: int = H.DEFAULT_K
    tol: float = TOL_ALG
    n: int = 5
    torsion: str = "125:2,345:2"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json"):
            raise UsageError("format must be csv or json")
        if self.tol <= 0:
            raise UsageError("tolerance must be positive")
        if self.samples < 1:
            raise UsageError("samples must be positive")
        if self.grid_step is not None and self.grid_step <= 0:
            raise UsageError("grid step must be positive")
        if self.grid_points is not None and self.grid_points < 1:
            raise UsageError("grid must have at least one point")
        if self.k < 1:
            raise UsageError("k must be a positive integer")

    def grid(self) -> list[float]:
        lo, hi, step = DEFAULT_GRIDS[self.command]
        lo = lo if self.grid_from is None else self.grid_from
        hi = hi if self.grid_to is None else self.grid_to
        if hi < lo:
            raise UsageError("empty grid: --grid-to is below --grid-from")
        step = self.grid_step if self.grid_step is not None else step
        if step is None or self.grid_points is not None:
            if self.command == "hopf" and lo <= 0:
                raise UsageError("the ellipsoid parameter must be positive")
            count = self.grid_points or HOPF_DEFAULT_POINTS
            return [round(float(v), 12) for v in np.geomspace(lo, hi, count)]
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return [round(lo + i * step, 12) for i in range(count)]


# ------------------------------------------------------------------ config


def _coerce(name: str, raw: str) -> Any:
    types = {f.name: f.type for f in fields(RunConfig)}
    if name not in types or name == "command":
        raise UsageError(f"unknown config key {name!r}")
    kind = types[name]
    try:
        if "int" in kind:
            return int(raw)
        if "float" in kind:
            return float(raw)
    except ValueError as exc:
        raise UsageError(f"bad value for {name}: {raw!r}") from exc
    return raw


def read_config_file(path: str) -> dict[str, Any]:
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, raw = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        values[key] = _coerce(key, raw)
    return values


# ------------------------------------------------------------------ output


def _fmt(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render_rows(rows: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(rows[0].keys())
        for r in rows:
            writer.writerow(_fmt(v) for v in r.values())
    return buf.getvalue()


def _value_or_none(v):
    return None if isinstance(v, B.NoBound) else float(v)


def bounds4_rows(cfg: RunConfig) -> list[dict[str, Any]]:
    """Dimension-4 bound over c with |T|^2 = 1."""
    rows = []
    for c in cfg.grid():
        inp = B.BoundInputs.from_ratio(c)
        bound = B.dim4_bound(inp)
        rows.append(
            {
                "c": c,
                "bound": _value_or_none(bound),
                "branch_label": B.DIM4_PIECES.label(c),
                "nobound_flag": isinstance(bound, B.NoBound),
                "universal": B.dim4_universal(inp),
                "s_deformed": B.dim4_s_deformed(inp),
            }
        )
    return rows


def bounds5_rows(cfg: RunConfig) -> list[dict[str, Any]]:
    rows = []
    for s in cfg.grid():
        if s <= -4:
            raise UsageError("the Sasakian grid must stay above -4")
        rows.append(
            {
                "scal_min": s,
                "beta_s": B.dim5_limiting_value(s),
                "beta_g": B.friedrich_bound(5, s),
                "beta_univ": B.dim5_universal(s),
                "selected": B.dim5_bound(s),
                "branch_label": B.DIM5_PIECES.label(s),
            }
        )
    return rows


def hopf_rows(cfg: RunConfig) -> list[dict[str, Any]]:
    rows = []
    for a in cfg.grid():
        p = H.hopf_point(a, cfg.k)
        rows.append(
            {
                "a": a,
                "vol": p.vol,
                "g_min": p.g_min,
                "t_norm": p.t_norm,
                "c": p.c,
                "beta_univ": p.beta_univ,
                "beta_s": p.beta_s,
                "k": cfg.k,
                "admissible": p.admissible,
            }
        )
    return rows


def parse_torsion(text: str, n: int) -> AltForm:
    """Parse ``"125:2,345:2"`` into 2 e125 + 2 e345."""
    terms = {}
    try:
        for chunk in text.split(","):
            idx, coef = chunk.split(":")
            terms[tuple(int(ch) for ch in idx.strip())] = float(coef)
        form = AltForm.from_terms(n, terms)
    except ValueError as exc:
        raise UsageError(f"cannot parse torsion {text!r}: {exc}") from exc
    if form.k != 3:
        raise UsageError("torsion must be a 3-form")
    return form


def spectrum_rows(cfg: RunConfig) -> list[dict[str, Any]]:
    try:
        rep = build_spinor_rep(cfg.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    T = parse_torsion(cfg.torsion, cfg.n)
    split = split_spinors(T, rep)
    rows = []
    for e in split.entries:
        reach = sorted(reachable_eigenvalues(e.mu, split, rep), reverse=True)
        rows.append(
            {
                "mu": round(e.mu, 10) + 0.0,
                "multiplicity": e.multiplicity,
                "reachable": " ".join(repr(round(m, 10) + 0.0) for m in reach),
            }
        )
    return rows


EMITTERS = {
    "bounds4": bounds4_rows,
    "bounds5": bounds5_rows,
    "hopf": hopf_rows,
    "spectrum": spectrum_rows,
}


# ------------------------------------------------------------------ parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="key = value file; flags override it")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--seed", type=int)
    common.add_argument("--tol", type=float, help="tolerance for exact-algebra checks")

    grid = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    grid.add_argument("--grid-from", dest="grid_from", type=float)
    grid.add_argument("--grid-to", dest="grid_to", type=float)
    grid.add_argument("--grid-step", dest="grid_step", type=float)

    parser = argparse.ArgumentParser(
        prog="torsionbounds",
        description="Checks and eigenvalue bounds for Dirac operators with parallel torsion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", parents=[common], help="run every algebraic and numerical check")
    p.add_argument("--samples", type=int, default=argparse.SUPPRESS)
    sub.add_parser("bounds4", parents=[common, grid], help="dimension-4 bound over c")
    sub.add_parser("bounds5", parents=[common, grid], help="Sasakian dimension-5 bound over Scal")
    p = sub.add_parser("hopf", parents=[common, grid], help="ellipsoid example curves over a")
    p.add_argument("--k", type=int, default=argparse.SUPPRESS)
    p.add_argument("--grid-points", dest="grid_points", type=int, default=argparse.SUPPRESS)
    p = sub.add_parser("spectrum", parents=[common], help="eigen-splitting of a 3-form")
    p.add_argument("--n", type=int, default=argparse.SUPPRESS)
    p.add_argument("--torsion", default=argparse.SUPPRESS, help='e.g. "125:2,345:2"')
    return parser


def make_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    values: dict[str, Any] = {}
    if "config" in ns:
        values.update(read_config_file(ns.pop("config")))
    values.update(ns)
    return RunConfig(**values)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = make_config(argv)
        if cfg.command == "verify":
            report = run_verify(seed=cfg.seed, samples=cfg.samples, tol=cfg.tol, k=cfg.k)
            _write(report.to_json(), cfg.out)
            for c in report.checks:
                status = "PASS" if c.passed else "FAIL"
                print(f"{status} {c.name} max_residual={c.max_residual:.3e}", file=sys.stderr)
            return 0 if report.passed else 1
        _write(render_rows(EMITTERS[cfg.command](cfg), cfg.format), cfg.out)
        return 0
    except UsageError as exc:
        print(f"torsionbounds: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"torsionbounds: I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
