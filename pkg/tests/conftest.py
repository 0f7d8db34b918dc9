"""Shared hypothesis strategies and exact-point helpers."""

from fractions import Fraction

from hypothesis import strategies as st

from schurdet import SkewShape
from schurdet.shapes import contains


@st.composite
def partitions(draw, max_rows=4, max_cols=6, min_size=0):
    rows = draw(st.integers(0 if min_size == 0 else 1, max_rows))
    parts = sorted((draw(st.integers(1, max_cols)) for _ in range(rows)),
                   reverse=True)
    return tuple(parts)


@st.composite
def skew_shapes(draw, max_rows=4, max_cols=6, min_cells=0):
    outer = draw(partitions(max_rows, max_cols, min_size=1))
    inner = tuple(draw(st.integers(0, v)) for v in outer)
    inner = tuple(sorted(inner, reverse=True))
    while not contains(inner, outer):
        inner = tuple(min(a, b) for a, b in zip(inner, outer))
    s = SkewShape(outer, inner)
    if len(s.cells()) < min_cells:
        s = SkewShape(outer, ())
    return s


def rational_points(d):
    return st.lists(st.fractions(min_value=Fraction(-30), max_value=Fraction(30),
                                 max_denominator=4),
                    min_size=d, max_size=d, unique=True)
