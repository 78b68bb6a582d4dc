"""Command-line front end.

Subcommands: ``measure``, ``evolve``, ``transition``, ``oracle-discord``,
``verify-theorems`` and ``reproduce``.  Exit status is 0 on success, 2 on
bad input and 3 on output failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import dynamics, measures, oracle
from .channels import ChannelKind, ChannelSpec
from .errors import BellcohError
from .qstate import (
    from_density_matrix,
    parse_state,
    random_physical_params,
    read_matrix,
    require_physical,
    to_density_matrix,
    validate_density_matrix,
)

CSV_HEADER = [
    "t", "c1", "c2", "c3",
    "mutual_info", "classical_corr", "discord",
    "coherence_rel_1", "coherence_rel_2", "coherence_rel_3",
    "coherence_l1_1", "coherence_l1_2", "coherence_l1_3",
    "optimal_axis", "region",
]

FIGURES = {
    "fig3": ((0.6, -0.6, 1.0), ChannelKind.BITFLIP),
    "fig4": ((1.0, -0.6, 0.6), ChannelKind.PHASEFLIP),
}
FIGURE_GAMMA = 0.1
FIGURE_T_MAX = 30.0
FIGURE_STEPS = 300
TABLE1_STATES = 1000


class InputError(Exception):
    pass


class OutputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def fmt(x) -> str:
    """12 significant digits; integers and labels verbatim."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x) + 0.0:.12g}"
    if x is None:
        return "none"
    if isinstance(x, (list, tuple)):
        return ";".join(fmt(v) for v in x)
    return str(x)


def _jsonable(x):
    if isinstance(x, (float, np.floating)):
        return float(fmt(x))
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


def render(records, fmt_name: str, header=None) -> str:
    records = list(records)
    if fmt_name == "json":
        payload = [{k: _jsonable(v) for k, v in r.items()} for r in records]
        return json.dumps(payload, indent=1) + "\n"
    header = header or list(records[0])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in records:
        w.writerow([fmt(r[k]) for k in header])
    return buf.getvalue()


def render_one(record: dict, fmt_name: str) -> str:
    """A single report: one JSON object, or a one-row CSV."""
    if fmt_name == "json":
        return json.dumps({k: _jsonable(v) for k, v in record.items()}, indent=1) + "\n"
    return render([record], "csv")


def emit(text: str, path=None):
    if path is None or str(path) == "-":
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except OSError as exc:
            raise OutputError(f"cannot write to stdout: {exc}") from exc
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def self_check(text: str, fmt_name: str, tol: float = 1e-10):
    """Re-read emitted rows and confirm ``I = CC + D``."""
    if fmt_name == "json":
        rows = json.loads(text)
        if isinstance(rows, dict):
            rows = [rows]
    else:
        rows = list(csv.DictReader(io.StringIO(text)))
    for i, r in enumerate(rows):
        if "mutual_info" not in r:
            continue
        i_, cc, d = (float(r[k]) for k in ("mutual_info", "classical_corr", "discord"))
        if abs(i_ - cc - d) > tol:
            raise OutputError(f"self-check failed at row {i}: I - CC - D = {i_ - cc - d:.3e}")


# ------------------------------------------------------------ arguments


def _state_arg(text):
    try:
        return parse_state(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be a positive number: {text!r}")
    return v


def _int_at_least(lo):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}: {text!r}")
        return v
    return conv


def _channel_arg(text):
    try:
        return ChannelKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output file (default stdout)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--self-check", action="store_true")

    grid = _Parser(add_help=False)
    grid.add_argument("--grid-theta", type=_int_at_least(2), default=None)
    grid.add_argument("--grid-phi", type=_int_at_least(2), default=None)
    grid.add_argument("--refine", type=_int_at_least(0), default=None)

    source = _Parser(add_help=False)
    src = source.add_mutually_exclusive_group(required=True)
    src.add_argument("--state", type=_state_arg)
    src.add_argument("--matrix", type=Path)

    p = _Parser(prog="bellcoh", description="Coherence and discord of Bell-diagonal states.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("measure", parents=[common], help="closed-form measures of one state")
    m.add_argument("--state", type=_state_arg, required=True)
    m.add_argument("--axis", type=int, choices=(1, 2, 3), default=None)

    e = sub.add_parser("evolve", parents=[common], help="trajectory under a flip channel")
    e.add_argument("--state", type=_state_arg, required=True)
    e.add_argument("--channel", type=_channel_arg, required=True)
    e.add_argument("--gamma", type=_positive, required=True)
    e.add_argument("--t-max", type=_positive, required=True)
    e.add_argument("--steps", type=_int_at_least(2), default=300)

    t = sub.add_parser("transition", parents=[common], help="analytic and detected transition time")
    t.add_argument("--state", type=_state_arg, required=True)
    t.add_argument("--channel", type=_channel_arg, required=True)
    t.add_argument("--gamma", type=_positive, required=True)
    t.add_argument("--steps", type=_int_at_least(4), default=300)

    sub.add_parser("oracle-discord", parents=[common, grid, source], help="numerical discords")
    sub.add_parser("verify-theorems", parents=[common, grid, source], help="check both theorems numerically")

    r = sub.add_parser("reproduce", parents=[common], help="write figure/table data")
    r.add_argument("figure", choices=("fig3", "fig4", "table1", "table2"))
    return p


# ------------------------------------------------------------- commands


def _grid(args, default: oracle.GridSpec) -> oracle.GridSpec:
    return oracle.GridSpec(
        n_theta=args.grid_theta or default.n_theta,
        n_phi=args.grid_phi or default.n_phi,
        refine_iters=default.refine_iters if args.refine is None else args.refine,
        refine_shrink=default.refine_shrink,
    )


def _load_matrix(args) -> np.ndarray:
    if args.state is not None:
        return to_density_matrix(args.state)
    try:
        return validate_density_matrix(read_matrix(args.matrix), herm_tol=1e-10, trace_tol=1e-8)
    except OSError as exc:
        raise InputError(f"cannot read {args.matrix}: {exc}") from exc


def cmd_measure(args) -> str:
    p = require_physical(args.state)
    rec = {"c1": p.c1, "c2": p.c2, "c3": p.c3}
    rec.update(measures.measure_set(p).as_dict())
    if args.axis is not None:
        rec["axis"] = args.axis
        rec["coherence_rel"] = measures.coherence_rel(p, args.axis)
        rec["coherence_l1"] = measures.coherence_l1(p, args.axis)
    return render_one(rec, args.format)


def trajectory_csv(traj, fmt_name="csv") -> str:
    return render(traj.rows(), fmt_name, header=CSV_HEADER)


def cmd_evolve(args) -> str:
    spec = ChannelSpec(args.channel, args.gamma)
    traj = dynamics.sweep_trajectory(require_physical(args.state), spec, args.t_max, args.steps)
    return trajectory_csv(traj, args.format)


def cmd_transition(args) -> str:
    p = require_physical(args.state)
    spec = ChannelSpec(args.channel, args.gamma)
    rep = dynamics.transition_time_analytic(p, spec)
    t_max = 4 * rep.analytic_t if rep.status == "crossing" else 30 / args.gamma * 0.1
    traj = dynamics.sweep_trajectory(p, spec, t_max, args.steps)
    detected = dynamics.detect_sudden_change(traj, "CC")
    step = t_max / args.steps
    within = None
    if rep.status == "crossing":
        within = any(abs(d - rep.analytic_t) <= step for d in detected)
    frozen = dynamics.empirical_frozen_check(traj, "CRel3")
    rec = {
        "state": ",".join(fmt(c) for c in p),
        "channel": spec.kind.value,
        "gamma": spec.gamma,
        "status": rep.status,
        "analytic_t": rep.analytic_t if rep.status == "crossing" else rep.status,
        "crossing": rep.crossing,
        "t_max": t_max,
        "steps": args.steps,
        "step": step,
        "detected_t": detected,
        "within_one_step": within,
        "frozen_predicate": dynamics.frozen_family_predicate(p, spec.kind),
        "frozen_coherence_rel_3": frozen.is_frozen,
        "frozen_max_deviation": frozen.max_deviation,
        "frozen_axes": [
            k for k in (1, 2, 3) if dynamics.empirical_frozen_check(traj, f"CRel{k}").is_frozen
        ],
    }
    return render_one(rec, args.format)


def cmd_oracle_discord(args) -> str:
    m = _load_matrix(args)
    one = oracle.discord_one_side(m, _grid(args, oracle.ONE_SIDE_GRID))
    two = oracle.discord_two_side(m, _grid(args, oracle.TWO_SIDE_GRID))
    rel = oracle.discord_relative_entropy(m, _grid(args, oracle.TWO_SIDE_GRID))
    rec = {
        "one_side": one.value,
        "one_side_theta": one.argmin_basis[0].theta,
        "one_side_phi": one.argmin_basis[0].phi,
        "two_side": two.value,
        "two_side_theta_a": two.argmin_basis[0].theta,
        "two_side_phi_a": two.argmin_basis[0].phi,
        "two_side_theta_b": two.argmin_basis[1].theta,
        "two_side_phi_b": two.argmin_basis[1].phi,
        "relative_entropy": rel.value,
        "relative_theta_a": rel.argmin_basis[0].theta,
        "relative_phi_a": rel.argmin_basis[0].phi,
        "relative_theta_b": rel.argmin_basis[1].theta,
        "relative_phi_b": rel.argmin_basis[1].phi,
        "closed_form": None,
        "gap_one_side": None,
        "gap_two_side": None,
        "gap_relative_entropy": None,
    }
    proj = from_density_matrix(m)
    if proj.is_bell_diagonal:
        d = measures.quantum_discord(proj.params)
        rec.update(
            closed_form=d,
            gap_one_side=abs(one.value - d),
            gap_two_side=abs(two.value - d),
            gap_relative_entropy=abs(rel.value - d),
        )
    return render_one(rec, args.format)


def cmd_verify_theorems(args) -> str:
    m = _load_matrix(args)
    grid = _grid(args, oracle.TWO_SIDE_GRID)
    t1 = oracle.verify_theorem1(m, grid)
    t2 = oracle.verify_theorem2(m, grid)
    rec = {
        "theorem1_lhs": t1.lhs,
        "theorem1_rhs": t1.rhs,
        "theorem1_gap": t1.gap,
        "theorem1_closed_form": t1.closed_form,
        "theorem1_closed_form_gap": t1.closed_form_gap,
        "theorem2_d2": t2.d2,
        "theorem2_c_ab": t2.c_ab,
        "theorem2_c_a": t2.c_a,
        "theorem2_c_b": t2.c_b,
        "theorem2_gap": t2.gap,
    }
    return render_one(rec, args.format)


def figure_trajectory(name: str):
    state, kind = FIGURES[name]
    spec = ChannelSpec(kind, FIGURE_GAMMA)
    return dynamics.sweep_trajectory(state, spec, FIGURE_T_MAX, FIGURE_STEPS)


def table1_records(seed: int, n: int = TABLE1_STATES):
    rng = np.random.default_rng(seed)
    for i, p in enumerate(random_physical_params(rng, n)):
        ms = measures.measure_set(p)
        opt = ms.coherence_rel[int(ms.optimal_axis) - 1]
        yield {
            "index": i, "c1": p.c1, "c2": p.c2, "c3": p.c3,
            "optimal_axis": int(ms.optimal_axis), "region": ms.region,
            "discord": ms.discord, "coherence_rel_opt": opt,
            "abs_diff": abs(ms.discord - opt),
        }


def table2_records():
    traj = figure_trajectory("fig4")
    table = dynamics.role_table(traj)
    for s, row in zip(traj.samples, table.rows):
        yield {
            "t": row.t, "label": row.label,
            "classical_corr": s.measures.classical_correlation,
            "discord": s.measures.discord,
            "residual_pre": row.residual_pre, "residual_post": row.residual_post,
        }


def cmd_reproduce(args):
    """Write ``<figure>.csv`` into the ``--output`` directory; return a summary line."""
    outdir = Path(args.output or ".")
    if args.figure in FIGURES:
        text = trajectory_csv(figure_trajectory(args.figure))
        summary = f"{args.figure}: {FIGURE_STEPS + 1} rows"
    elif args.figure == "table1":
        recs = list(table1_records(args.seed))
        bad = sum(r["abs_diff"] > 1e-12 for r in recs)
        text = render(recs, "csv")
        summary = f"table1: {len(recs)} states, {bad} violations of D = C_r(optimal axis)"
    else:
        recs = list(table2_records())
        worst = max(r["residual_pre"] if r["label"] == "pre" else r["residual_post"] for r in recs)
        text = render(recs, "csv")
        summary = f"table2: {len(recs)} rows, max active-branch residual {worst:.3e}"
    if args.self_check:
        self_check(text, "csv")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create {outdir}: {exc}") from exc
    path = outdir / f"{args.figure}.csv"
    emit(text, path)
    return f"{summary} -> {path}\n"


COMMANDS = {
    "measure": cmd_measure,
    "evolve": cmd_evolve,
    "transition": cmd_transition,
    "oracle-discord": cmd_oracle_discord,
    "verify-theorems": cmd_verify_theorems,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "reproduce":
            emit(cmd_reproduce(args))
            return 0
        text = COMMANDS[args.command](args)
        if args.self_check:
            self_check(text, args.format)
        emit(text, args.output)
        return 0
    except (InputError, BellcohError) as exc:
        print(f"bellcoh: error: {_one_line(exc)}", file=sys.stderr)
        return 2
    except OutputError as exc:
        print(f"bellcoh: error: {_one_line(exc)}", file=sys.stderr)
        return 3


def _one_line(exc) -> str:
    return " ".join(str(exc).split())


if __name__ == "__main__":
    sys.exit(main())
