"""Command-line front end: run scenarios, inspect steady states, emit specs.

Subcommands
-----------
simulate   integrate a scenario (or a custom JSON system) and write the
           trajectory as CSV with metadata comment lines
steady     report the stationary state(s) and their energy flows
emit-spec  write a scenario's system description in the JSON schema

Exit codes: 0 success, 2 bad input (unknown scenario, malformed JSON or
schema), 3 integration failure, 4 filesystem trouble.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .dynamics import IntegrationError, evolve
from .energetics import gamma, heat_currents, power
from .liouvillian import build_liouvillian
from .model import SpecError, spec_from_dict, spec_to_dict
from .scenarios import SCENARIOS, apply_overrides, build_scenario, default_protocol
from .steady import steady_states

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTEGRATION = 3
EXIT_IO = 4


# ---------------------------------------------------------------------------
# CSV emission
# ---------------------------------------------------------------------------

def trajectory_columns(spec):
    """Column names of the trajectory CSV, in schema order."""
    cols = ["t"]
    cols += [f"p_{lv.label}" for lv in spec.levels]
    for upper, lower in spec.coherence_pairs():
        cols += [f"re_rho_{upper}{lower}", f"im_rho_{upper}{lower}"]
    cols.append("P")
    cols += [f"J_{tr.upper}{tr.lower}" for tr in spec.transitions]
    cols.append("J_total")
    if spec.bath_groups is not None:
        cols += [f"J_{name}" for name in spec.bath_groups]
    cols += ["E", "W", "Q"]
    return cols


def _fmt(x):
    return format(float(x), ".17g")


def write_trajectory_csv(stream, trajectory):
    """Write one trajectory in the public CSV schema with # metadata."""
    spec = trajectory.spec
    proto = trajectory.protocol
    init = proto.initial_state
    proto_doc = {
        "pre_window": proto.pre_window,
        "t_max": proto.t_max,
        "sample_interval": proto.sample_interval,
        "rtol": proto.rtol,
        "atol": proto.atol,
        "steady_eps": proto.steady_eps,
        "initial_state": init if isinstance(init, str) else "explicit",
    }
    stream.write("# fewlevel trajectory export\n")
    stream.write(f"# version: {__version__}\n")
    stream.write(f"# spec: {json.dumps(spec_to_dict(spec), separators=(',', ':'))}\n")
    stream.write(f"# protocol: {json.dumps(proto_doc, separators=(',', ':'))}\n")
    stream.write(f"# termination: {trajectory.termination}\n")
    stream.write(",".join(trajectory_columns(spec)) + "\n")

    pair_indices = [(spec.index(u), spec.index(l))
                    for u, l in spec.coherence_pairs()]
    group_names = list(spec.bath_groups) if spec.bath_groups is not None else []
    for t, rho, es in trajectory.samples:
        row = [t]
        row += [rho[k, k].real for k in range(spec.dim)]
        for i, j in pair_indices:
            row += [rho[i, j].real, rho[i, j].imag]
        row.append(es.power_total)
        row += [es.current_by_transition[tr.pair] for tr in spec.transitions]
        row.append(es.current_total)
        row += [es.group_currents[name] for name in group_names]
        row += [es.energy, es.work_accum, es.heat_accum_total]
        stream.write(",".join(_fmt(v) for v in row) + "\n")


# ---------------------------------------------------------------------------
# Spec resolution shared by the subcommands
# ---------------------------------------------------------------------------

def _load_custom_spec(path):
    try:
        with open(path) as fh:
            raw = fh.read()
    except OSError as exc:
        raise exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return spec_from_dict(data)


def _resolve_spec(args):
    overrides = dict(rabi=args.rabi, temp=args.temp,
                     temp_left=args.temp_left, temp_right=args.temp_right)
    if args.target == "custom":
        if not args.spec:
            raise SpecError("custom target requires --spec PATH")
        spec = _load_custom_spec(args.spec)
        return apply_overrides(spec, **overrides)
    return build_scenario(args.target, **overrides)


def _describe(spec):
    drives = ", ".join(f"{d.upper}-{d.lower} rabi={d.rabi:g}" for d in spec.drives)
    temps = ", ".join(f"{tr.upper}{tr.lower}@{tr.bath} T={tr.temperature:g}"
                      for tr in spec.transitions)
    return (f"levels={''.join(lv.label for lv in spec.levels)} "
            f"drives=[{drives or 'none'}] baths=[{temps}]")


def _summary_line(trajectory):
    es = trajectory.final_energetics
    parts = [f"P={es.power_total:.6g}", f"|J|={abs(es.current_total):.6g}"]
    if es.group_currents:
        parts += [f"J_{name}={value:.6g}"
                  for name, value in es.group_currents.items()]
    spec = trajectory.spec
    for dr in spec.drives:
        gap = spec.gap(dr.upper, dr.lower)
        if abs(gap - 1.0) > 1e-12:
            # drive sits on a smaller gap: report both normalizations
            parts.append(
                f"P/E_{dr.upper}{dr.lower}={es.power_total / gap:.6g}")
    parts.append(f"termination={trajectory.termination}")
    return "steady-state " + " ".join(parts)


# ---------------------------------------------------------------------------
# Subcommand implementations
# ---------------------------------------------------------------------------

def _simulate_one(args, target, out_path):
    ns = argparse.Namespace(**{**vars(args), "target": target})
    spec = _resolve_spec(ns)
    protocol = default_protocol(spec, t_max=args.tmax, rtol=args.rtol)
    trajectory = evolve(spec, protocol)
    with open(out_path, "w") as fh:
        write_trajectory_csv(fh, trajectory)
    lines = [f"{target}: {_describe(spec)}",
             f"{target}: {_summary_line(trajectory)} -> {out_path}"]
    return lines


def cmd_simulate(args):
    if args.batch:
        if not args.outdir:
            print("--batch requires --outdir", file=sys.stderr)
            return EXIT_USAGE
        import os
        os.makedirs(args.outdir, exist_ok=True)
        jobs = [(t, os.path.join(args.outdir, f"{t}.csv")) for t in args.target]
        with ThreadPoolExecutor(max_workers=len(jobs)) as pool:
            futures = [pool.submit(_simulate_one, args, t, p) for t, p in jobs]
            for fut in futures:
                for line in fut.result():
                    print(line)
        return EXIT_OK
    if len(args.target) != 1:
        print("exactly one target expected unless --batch is given",
              file=sys.stderr)
        return EXIT_USAGE
    target = args.target[0]
    out = args.out or f"{target}.csv"
    for line in _simulate_one(args, target, out):
        print(line)
    return EXIT_OK


def _state_doc(rho):
    return {"re": np.real(rho).tolist(), "im": np.imag(rho).tolist()}


def cmd_steady(args):
    spec = _resolve_spec(args)
    liou = build_liouvillian(spec)
    result = steady_states(liou)

    doc = {"null_dimension": result.null_dimension,
           "residual": result.residual,
           "states": [_state_doc(rho) for rho in result.states]}
    if result.null_dimension == 1:
        rho = result.states[0]
        p_total, p_by_drive = power(spec, rho)
        j_by_tr, j_total, j_by_group = heat_currents(spec, liou, rho)
        doc.update({
            "power": p_total,
            "power_by_drive": {f"{u}{l}": v for (u, l), v in p_by_drive.items()},
            "currents": {f"{u}{l}": v for (u, l), v in j_by_tr.items()},
            "current_total": j_total,
            "group_currents": j_by_group,
            "gammas": {f"{tr.upper}{tr.lower}": gamma(spec, tr, rho)
                       for tr in spec.transitions},
        })

    if args.json:
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    print(_describe(spec))
    print(f"null dimension: {result.null_dimension}")
    if result.null_dimension > 1:
        print("no unique steady state; listing a spanning set of "
              "admissible states")
    for k, rho in enumerate(result.states):
        print(f"state {k} (residual {result.residuals[k]:.2e}):")
        with np.printoptions(precision=6, suppress=True):
            print(np.array2string(rho))
    if result.null_dimension == 1:
        print(f"P = {doc['power']:.8g}")
        for name, value in doc["currents"].items():
            print(f"J_{name} = {value:.8g}   Gamma_{name} = {doc['gammas'][name]:.8g}")
        print(f"J_total = {doc['current_total']:.8g}")
        if doc["group_currents"]:
            for name, value in doc["group_currents"].items():
                print(f"J_{name} = {value:.8g}")
    return EXIT_OK


def cmd_emit_spec(args):
    spec = build_scenario(args.scenario)
    text = json.dumps(spec_to_dict(spec), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _add_override_args(parser):
    parser.add_argument("--rabi", type=float, default=None,
                        help="override the drive coupling")
    parser.add_argument("--temp", type=float, default=None,
                        help="override every bath temperature")
    parser.add_argument("--temp-left", type=float, default=None,
                        help="override the left bath temperature")
    parser.add_argument("--temp-right", type=float, default=None,
                        help="override the right bath temperature")
    parser.add_argument("--spec", default=None,
                        help="JSON system description (with target 'custom')")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fewlevel",
        description="Driven-dissipative few-level systems: dynamics, "
                    "energy flows, steady states.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    targets = sorted(SCENARIOS) + ["custom"]

    p_sim = sub.add_parser("simulate", help="integrate and write a CSV trajectory")
    p_sim.add_argument("target", nargs="+", choices=targets,
                       help="scenario name(s) or 'custom'")
    _add_override_args(p_sim)
    p_sim.add_argument("--tmax", type=float, default=None,
                       help="override the final time")
    p_sim.add_argument("--rtol", type=float, default=None,
                       help="override the relative step tolerance")
    p_sim.add_argument("-o", "--out", default=None,
                       help="output CSV path (default <target>.csv)")
    p_sim.add_argument("--batch", action="store_true",
                       help="run all targets concurrently into --outdir")
    p_sim.add_argument("--outdir", default=None,
                       help="output directory for --batch")
    p_sim.set_defaults(func=cmd_simulate)

    p_st = sub.add_parser("steady", help="report stationary states and flows")
    p_st.add_argument("target", choices=targets)
    _add_override_args(p_st)
    p_st.add_argument("--json", action="store_true",
                      help="machine-readable output")
    p_st.set_defaults(func=cmd_steady)

    p_em = sub.add_parser("emit-spec", help="write a scenario's JSON description")
    p_em.add_argument("scenario", choices=sorted(SCENARIOS))
    p_em.add_argument("-o", "--out", default=None,
                      help="output path (default stdout)")
    p_em.set_defaults(func=cmd_emit_spec)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrationError as exc:
        print(f"integration failed: {exc}", file=sys.stderr)
        return EXIT_INTEGRATION
    except OSError as exc:
        print(f"filesystem error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
