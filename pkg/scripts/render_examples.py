#!/usr/bin/env python3
"""Render a Rauzy diagram and a suspension polygon for a given table.

Writes ``<stem>.dot`` (the class diagram) and ``<stem>.svg`` (the polygon
over the canonical suspension vector)::

    python scripts/render_examples.py "1 1 2 / 2 3 3" --stem q1111
"""
import argparse
import sys

from rauzy import (
    build_polygon,
    export_dot,
    find_suspension,
    parse,
    polygon_svg,
    rauzy_class,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("perm")
    parser.add_argument("--stem", default="diagram")
    args = parser.parse_args()

    p = parse(args.perm)
    z = find_suspension(p)
    if z is None:
        print("error: table admits no suspension", file=sys.stderr)
        return 1
    diagram = rauzy_class(p)
    with open(f"{args.stem}.dot", "w", encoding="utf-8") as fh:
        fh.write(export_dot(diagram) + "\n")
    with open(f"{args.stem}.svg", "w", encoding="utf-8") as fh:
        fh.write(polygon_svg(build_polygon(p, z)) + "\n")
    print(f"{args.stem}.dot: {len(diagram)} vertices")
    print(f"{args.stem}.svg: polygon over {z}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
