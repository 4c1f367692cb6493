"""Command line entry point: solve, check, compare, matrices, sweep."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import foc
from .economics import baseline_no_game, compare_scenarios, evaluate
from .hmatrix import derive_matrices, discrepancy_report, printed_matrices
from .model import DomainError, ModelParams, params_from_dict, validate
from .oracle import SingularSystem, compare, solve_direct
from .sweep import SingularSweep, residual_norm, solve

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SINGULAR = 0, 1, 2, 3
CHECK_TOL = 1e-8


class InputError(Exception):
    pass


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def load_params(path) -> ModelParams:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("config must be a JSON object")
    return params_from_dict(data)


def write_table(out_dir: Path, stem: str, header, rows, fmt_name: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    if fmt_name == "csv":
        path = out_dir / f"{stem}.csv"
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])
        path.write_text(buf.getvalue())
    else:
        path = out_dir / f"{stem}.json"
        records = [{k: _json_value(v) for k, v in zip(header, row)} for row in rows]
        path.write_text(json.dumps(records, indent=1) + "\n")
    return path


def _json_value(v):
    if v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return int(v)
    return float(v)


def trajectory_rows(traj):
    rows = []
    for t in range(traj.T + 1):
        inv = traj.inv[t] if t < traj.T else (None, None, None)
        rows.append([t + 1, *traj.xs[t], *traj.ps[t], *inv])
    return rows


TRAJ_HEADER = ["t", "x", "mu", "u", "pS", "pM", "pR", "iS", "iM", "iR"]
PROFIT_HEADER = ["t", "jS", "jM", "jR", "cumJS", "cumJM", "cumJR"]


def cmd_solve(args) -> int:
    params = load_params(args.config)
    m = derive_matrices(params)
    traj = solve(params, m)
    profits = evaluate(traj, params)
    out = Path(args.out)
    write_table(out, "trajectory", TRAJ_HEADER, trajectory_rows(traj), args.format)
    rows = [[t + 1, *profits.per_period[t], *profits.cumulative[t]] for t in range(params.T)]
    write_table(out, "profits", PROFIT_HEADER, rows, args.format)
    print(f"residual_norm {fmt(residual_norm(traj, m))}")
    return EXIT_OK


def cmd_check(args) -> int:
    params = load_params(args.config)
    m = derive_matrices(params)
    a = solve(params, m)
    b = solve_direct(params, m)
    diff = compare(a, b)
    print(f"compare {fmt(diff)}")
    print(f"residual_norm sweep {fmt(residual_norm(a, m))}")
    print(f"residual_norm oracle {fmt(residual_norm(b, m))}")
    curv = foc.own_curvatures(params)
    print("own-investment curvature S/M/R " + " ".join(fmt(c) for c in curv)
          + (" (stationary points are Hamiltonian minima)" if min(curv) > 0 else ""))
    print("period 1 investments iS iM iR " + " ".join(fmt(v) for v in a.inv[0]))
    report = discrepancy_report(params)
    print(f"discrepancies {len(report)}")
    for name, derived, printed, d in report:
        print(f"  {name} derived={fmt(derived)} printed={fmt(printed)} diff={fmt(d)}")
    return EXIT_OK if diff <= CHECK_TOL else EXIT_FAIL


def cmd_compare(args) -> int:
    params = load_params(args.config)
    comp = compare_scenarios(params)
    header = ["t"]
    for who in ("S", "M", "R"):
        header += [f"J{who}", f"J{who}O", f"gain{who}",
                   f"cumJ{who}", f"cumJ{who}O", f"cumGain{who}"]
    rows = []
    for t in range(params.T):
        row = [t + 1]
        for j in range(3):
            row += [comp.game.per_period[t, j], comp.baseline.per_period[t, j],
                    comp.gain[t, j], comp.game.cumulative[t, j],
                    comp.baseline.cumulative[t, j], comp.cumulative_gain[t, j]]
        rows.append(row)
    write_table(Path(args.out), "comparison", header, rows, args.format)
    totals = comp.cumulative_gain[-1]
    print("cumulative gain S M R " + " ".join(fmt(v) for v in totals))
    print("ordering by game profit: " + " > ".join(
        name for _, name in sorted(zip(comp.game.totals, "SMR"), reverse=True)))
    return EXIT_OK


def cmd_matrices(args) -> int:
    params = load_params(args.config)
    derived = derive_matrices(params)
    printed = printed_matrices(params)
    dump = {
        "order": {"state": ["x", "mu", "u"], "costate": ["pS", "pM", "pR"]},
        "derived": derived.to_dict(),
        "derived_entries": derived.entries(),
        "printed": printed.to_dict(),
        "printed_entries": printed.entries(),
        "discrepancies": [
            {"entry": n, "derived": d, "printed": p, "abs_diff": e}
            for n, d, p, e in discrepancy_report(params)
        ],
    }
    text = json.dumps(dump, indent=1) + "\n"
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "matrices.json").write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


SWEEP_HEADER = ["value", "status", "JS", "JM", "JR", "gainS", "gainM", "gainR", "residual"]


def _sweep_point(params: ModelParams, name: str, value):
    try:
        p = validate(params.replace(**{name: value}))
        m = derive_matrices(p)
        traj = solve(p, m)
    except DomainError as exc:
        return [value, f"invalid: {exc}"] + [None] * 7
    except SingularSweep:
        return [value, "singular"] + [None] * 7
    game = evaluate(traj, p)
    gain = game.totals - baseline_no_game(p).totals
    return [value, "ok", *game.totals, *gain, residual_norm(traj, m)]


def cmd_sweep(args) -> int:
    params = load_params(args.config)
    if args.param not in ModelParams.field_names():
        raise InputError(f"unknown parameter {args.param!r}")
    if args.steps is None or args.start is None or args.stop is None:
        raise InputError("sweep needs --param, --from, --to and --steps")
    if args.steps < 2:
        raise InputError("--steps must be >= 2")
    values = np.linspace(args.start, args.stop, args.steps)
    if args.param == "T":
        values = [int(round(v)) for v in values]
    else:
        values = [float(v) for v in values]
    rows = [_sweep_point(params, args.param, v) for v in values]
    write_table(Path(args.out), "summary", SWEEP_HEADER, rows, args.format)
    print(f"{sum(r[1] == 'ok' for r in rows)}/{len(rows)} points solved")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "compare": cmd_compare,
    "matrices": cmd_matrices,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csrgame", description="Open-loop Stackelberg CSR investment game solver")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True, help="JSON parameter file")
        sp.add_argument("--out", default=".", help="output directory")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        if name == "sweep":
            sp.add_argument("--param")
            sp.add_argument("--from", dest="start", type=float)
            sp.add_argument("--to", dest="stop", type=float)
            sp.add_argument("--steps", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (DomainError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SingularSweep, SingularSystem) as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
