"""plotviz map|slice|norms: figures from solver dumps and CSV artifacts."""
from __future__ import annotations

import argparse
import sys

from .dumps import ParseError
from .render import PlotJob, render


def _build_parser():
    parser = argparse.ArgumentParser(prog="plotviz",
                                     description="render figures from MHD solver output")
    sub = parser.add_subparsers(dest="kind", required=True)

    p_map = sub.add_parser("map", help="pseudocolor map from a field dump")
    p_map.add_argument("--in", dest="inputs", action="append", required=True)
    p_map.add_argument("--var", default="rho",
                       help="stored field or derived: speed, magp")
    p_map.add_argument("--out", required=True)
    p_map.add_argument("--title", default="")

    p_slice = sub.add_parser("slice", help="overlay up to three slice CSVs")
    p_slice.add_argument("--in", dest="inputs", action="append", required=True)
    p_slice.add_argument("--var", default="rho")
    p_slice.add_argument("--label", dest="labels", action="append", default=[])
    p_slice.add_argument("--out", required=True)
    p_slice.add_argument("--title", default="")

    p_norms = sub.add_parser("norms", help="divergence-norm time series")
    p_norms.add_argument("--in", dest="inputs", action="append", required=True)
    p_norms.add_argument("--out", required=True)
    p_norms.add_argument("--title", default="")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    job = PlotJob(kind=args.kind, inputs=args.inputs,
                  variable=getattr(args, "var", "rho"), output=args.out,
                  labels=getattr(args, "labels", []), title=args.title)
    try:
        path = render(job)
    except (ParseError, KeyError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
