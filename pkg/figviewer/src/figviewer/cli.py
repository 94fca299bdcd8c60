"""Command-line entry: render --figure fig1 --csv a.csv [--csv b.csv] --out fig1.png"""

from __future__ import annotations

import argparse
import sys

from .recipes import RECIPES, recipe_for
from .render import RenderError, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render fewlevel trajectory CSVs into figure images.")
    parser.add_argument("--figure", required=True, choices=sorted(RECIPES),
                        help="figure recipe to apply")
    parser.add_argument("--csv", action="append", required=True,
                        metavar="PATH",
                        help="input CSV; repeat for solid/dashed comparisons")
    parser.add_argument("--out", required=True,
                        help="output image path (.png or .svg)")
    parser.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        render(recipe_for(args.figure), args.csv, args.out, dpi=args.dpi)
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
