"""Command-line interface: benchmark runs, convergence tables, and slices.

Exit codes: 0 on success, 2 on configuration errors, 3 on runtime failures
(instability or loss of admissibility).  Options may also come from a plain
"key = value" config file (# comments allowed); explicit flags win.
"""
from __future__ import annotations

import argparse
import os
import sys

from .convergence import convergence_study, write_convergence_csv
from .errors import MhdError
from .io import (FIELD_NAMES, read_dump, write_diagnostics_csv, write_dump,
                 write_slice_csv)
from .problems import problem
from .solver import SchemeVariant, SolverConfig, run
from .timestepping import TimeControls

SCHEMES = [v.value for v in SchemeVariant]


def read_config_file(path):
    """Parse `key = value` lines; keys use the CLI flag spelling without --."""
    values = {}
    with open(path) as fh:
        for ln, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{ln}: expected 'key = value', got {raw!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


_CONFIG_TYPES = {
    "nx": int, "ny": int, "theta": float, "cfl": float, "eps": float,
    "t_final": float, "dt_min": float, "at": float, "floor": bool,
}


def _apply_config_defaults(args, parser, argv):
    if not getattr(args, "config", None):
        return args
    file_values = read_config_file(args.config)
    explicit = {a.lstrip("-").split("=")[0].replace("-", "_")
                for a in argv if a.startswith("--")}
    for key, val in file_values.items():
        if key in explicit or not hasattr(args, key):
            continue
        typ = _CONFIG_TYPES.get(key, str)
        if typ is bool:
            setattr(args, key, val.lower() in ("1", "true", "yes", "on"))
        else:
            setattr(args, key, typ(val))
    return args


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mhdcu",
        description="Locally divergence-free central-upwind MHD benchmark driver",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="integrate a benchmark problem")
    p_run.add_argument("--problem", required=True)
    p_run.add_argument("--scheme", default="lcd-pccu", choices=SCHEMES)
    p_run.add_argument("--nx", type=int, default=None)
    p_run.add_argument("--ny", type=int, default=None)
    p_run.add_argument("--theta", type=float, default=None)
    p_run.add_argument("--cfl", type=float, default=0.25)
    p_run.add_argument("--eps", type=float, default=1e-8)
    p_run.add_argument("--t-final", type=float, default=None, dest="t_final")
    p_run.add_argument("--dt-min", type=float, default=1e-13, dest="dt_min",
                       help="abort threshold for the adaptive step")
    p_run.add_argument("--floor", action="store_true")
    p_run.add_argument("--out", required=True, help="output directory")
    p_run.add_argument("--snapshot-times", default="", dest="snapshot_times",
                       help="comma-separated times for intermediate dumps")
    p_run.add_argument("--config", default=None, help="key = value config file")

    p_conv = sub.add_parser("convergence", help="mesh-refinement error table")
    p_conv.add_argument("--problem", default="alfven")
    p_conv.add_argument("--meshes", required=True,
                        help="comma-separated, factor-2 nested, e.g. 20,40,80")
    p_conv.add_argument("--scheme", default="lcd-pccu", choices=SCHEMES)
    p_conv.add_argument("--t-final", type=float, default=None, dest="t_final")
    p_conv.add_argument("--cfl", type=float, default=0.25)
    p_conv.add_argument("--out", required=True, help="CSV table path")
    p_conv.add_argument("--config", default=None)

    p_slice = sub.add_parser("slice", help="extract a 1-D slice from a dump")
    p_slice.add_argument("--in", dest="infile", required=True)
    p_slice.add_argument("--axis", required=True, choices=["x", "y"])
    p_slice.add_argument("--at", type=float, required=True)
    p_slice.add_argument("--vars", default="rho,p",
                         help=f"comma list from {','.join(FIELD_NAMES)}")
    p_slice.add_argument("--out", required=True)
    p_slice.add_argument("--config", default=None)
    return parser


def _cmd_run(args):
    spec = problem(args.problem)
    nx = args.nx or spec.paper_mesh[0]
    ny = args.ny or spec.paper_mesh[1]
    theta = spec.theta if args.theta is None else args.theta
    t_final = spec.t_final if args.t_final is None else args.t_final
    grid = spec.grid(nx, ny)
    cfg = SolverConfig(theta=theta, eps=args.eps, floor=args.floor)
    variant = SchemeVariant(args.scheme)
    snaps = [float(s) for s in args.snapshot_times.split(",") if s.strip()]
    os.makedirs(args.out, exist_ok=True)

    def dump_snapshot(t, w):
        name = "final.dump" if abs(t - t_final) < 1e-12 * max(1.0, t_final) \
            else f"snap_t{t:.6f}.dump"
        write_dump(os.path.join(args.out, name), w, grid, spec.gas(), t,
                   problem=spec.name, variant=variant.value)

    res = run(spec.initial_field(grid), grid, spec.bc, spec.gas(),
              TimeControls(t_final=t_final, cfl=args.cfl, dt_min=args.dt_min),
              variant=variant, cfg=cfg, snapshot_times=snaps,
              snapshot_cb=dump_snapshot)
    write_diagnostics_csv(res.diagnostics, os.path.join(args.out, "diagnostics.csv"))
    print(f"{spec.name}: {res.steps} steps to t={res.t:g} on {nx}x{ny}; "
          f"outputs in {args.out}")
    return 0


def _cmd_convergence(args):
    meshes = [int(m) for m in args.meshes.split(",") if m.strip()]
    rows = convergence_study(meshes, variant=SchemeVariant(args.scheme),
                             t_final=args.t_final, cfl=args.cfl,
                             problem_name=args.problem)
    write_convergence_csv(rows, args.out)
    for r in rows:
        ru = "--" if r.rate_u is None else f"{r.rate_u:.2f}"
        rb = "--" if r.rate_b3 is None else f"{r.rate_b3:.2f}"
        print(f"{r.mesh:4d}^2  u: {r.err_u:.3e} ({ru})  b3: {r.err_b3:.3e} ({rb})")
    return 0


def _cmd_slice(args):
    dump = read_dump(args.infile)
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    idx = write_slice_csv(dump, args.axis, args.at, variables, args.out)
    print(f"slice along {args.axis} at index {idx} -> {args.out}")
    return 0


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args = _apply_config_defaults(args, parser, argv)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "convergence":
            return _cmd_convergence(args)
        return _cmd_slice(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except MhdError as e:
        print(f"runtime failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
