#!/usr/bin/env python3
"""Interactive-ish tour of a skew shape's cutting-strip decompositions.

Renders the shape, its outer and inner cutting strips, the pairing
(p_j, q_i) for both canonical decompositions, and the defining
determinant in the free ring:

    python3 scripts/explore_decompositions.py "[6,6,6,3,3]/[4,3,2]"
"""

import argparse
import json
import sys

sys.path.insert(0, "src")

from schurdet import (SkewShape, decompose, inner_strip, kreiman,
                      lascoux_pragacz, outer_strip, partition, schur9)
from schurdet.cli import _parse_shape, _render_grid


def parse_shape(text):
    # allow the "[outer]/[inner]" shorthand on top of the CLI's JSON forms
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(partition(json.loads(outer)),
                         partition(json.loads(inner)))
    return _parse_shape(text)


def show_strip(label, gamma):
    print("%s: p=%d q=%d (%d cells)" % (label, gamma.p, gamma.q,
                                        len(gamma.cells)))
    for line in _render_grid(set(gamma.cells), set(), 0):
        print("  " + line)


def show_dec(label, dec):
    print("%s: k=%d" % (label, dec.k))
    for t, st in enumerate(dec.strips):
        print("  theta_%d = gamma[%d,%d]  shift %+d" % (t + 1, st.p, st.q,
                                                        dec.shifts[t]))
    print("  pairs:", sorted(dec.pairs()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("shape", help='e.g. "[6,6,6,3,3]/[4,3,2]"')
    ap.add_argument("--determinant", action="store_true",
                    help="also print the expanded free-ring determinant")
    args = ap.parse_args()

    s = _parse_shape(args.shape)
    print("shape %s / %s, %d cells" % (list(s.outer), list(s.inner),
                                       len(s.cells())))
    for line in _render_grid(s.cells(), set(), 0):
        print("  " + line)
    print()

    show_strip("outer strip", outer_strip(s.outer))
    show_strip("inner strip", inner_strip(s))
    print()

    show_dec("Lascoux-Pragacz", lascoux_pragacz(s))
    show_dec("Kreiman", kreiman(s))

    if args.determinant:
        print()
        print("schur9 =", schur9(s, len(s.outer) or 1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
