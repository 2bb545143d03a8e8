"""Command line entry point: figures --kind <k> --in <csv> --out <img>."""

import argparse
import sys

from .specs import KINDS, FigureInputError, FigureSpec


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render nucleosim CSV artifacts as figures")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--in", dest="csv_in", required=True,
                        help="input CSV")
    parser.add_argument("--in2", dest="csv_in2", default=None,
                        help="secondary CSV (vacua markers for the "
                             "potential kind)")
    parser.add_argument("--out", required=True,
                        help="output image (format from extension)")
    parser.add_argument("--xlabel", default=None)
    parser.add_argument("--ylabel", default=None)
    parser.add_argument("--no-regime-bands", action="store_true",
                        help="disable regime shading on trajectories")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            kind=args.kind, csv_in=args.csv_in, out=args.out,
            csv_in2=args.csv_in2, xlabel=args.xlabel, ylabel=args.ylabel,
            shade_regimes=not args.no_regime_bands)
        from .render import render
        render(spec)
        return 0
    except FigureInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
