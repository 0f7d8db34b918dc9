"""Partitions, content codes, skew shapes, and boundary moves."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurdet import (SkewShape, c_n_set, cells, conjugate, connected_components,
                      cont_set, disjoint_union_shape, frobenius_to_partition,
                      modify, partition, partition_to_frobenius, skew_from_cells)
from schurdet.shapes import (contains, content, part, partition_cells,
                             partition_from_set)
from schurdet.strips import structural_modify

from conftest import partitions, skew_shapes


def test_partition_normalizes_and_validates():
    assert partition([3, 2, 0, 0]) == (3, 2)
    assert partition(()) == ()
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_part_is_zero_padded():
    lam = (4, 2)
    assert [part(lam, i) for i in (1, 2, 3, 9)] == [4, 2, 0, 0]


def test_content_and_cells():
    assert content((3, 5)) == 2
    assert partition_cells((2, 1)) == {(1, 1), (1, 2), (2, 1)}


def test_content_code_golden():
    assert c_n_set((6, 6, 4, 2), 6) == {5, 4, 1, -2, -5, -6}


@given(partitions(max_rows=5, max_cols=7), st.integers(0, 3))
def test_content_code_roundtrip(lam, extra):
    n = len(lam) + extra
    if n == 0:
        n = 1
    assert partition_from_set(c_n_set(lam, n), n) == lam


def test_modify_goldens():
    lam = (6, 6, 4, 2)
    assert modify(lam, 6, 4, 0) == (6, 3, 3, 2)
    assert modify(lam, 6, -5, 2) == (6, 6, 5, 5, 3)
    assert modify(lam, 6, 4, 4) == lam


def test_modify_rejects_bad_contents():
    lam = (6, 6, 4, 2)
    with pytest.raises(ValueError):
        modify(lam, 6, 0, 2)        # 0 is not in the code
    with pytest.raises(ValueError):
        modify(lam, 6, 4, 5)        # 5 already in the code
    with pytest.raises(ValueError):
        modify(lam, 6, 4, -7)       # below -n


@given(partitions(max_rows=4, max_cols=6), st.integers(-4, 9))
def test_modify_agrees_with_boundary_construction(lam, b):
    n = 4
    C = c_n_set(lam, n)
    if b in C:
        return
    for a in C:
        assert modify(lam, n, a, b) == structural_modify(lam, n, a, b)


@given(partitions(max_rows=4, max_cols=6), st.integers(-4, 9))
def test_modify_swaps_exactly_one_code_element(lam, b):
    n = 4
    C = c_n_set(lam, n)
    if b in C:
        return
    for a in C:
        assert c_n_set(modify(lam, n, a, b), n) == (C - {a}) | {b}


@given(partitions(max_rows=5, max_cols=6))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert partition_cells(conjugate(lam)) == {(j, i) for i, j in partition_cells(lam)}


def test_frobenius_golden():
    assert frobenius_to_partition((4, 2, 1), (3, 1, 0)) == (5, 4, 4, 1)
    assert partition_to_frobenius((5, 4, 4, 1)) == ((4, 2, 1), (3, 1, 0))


@given(partitions(max_rows=5, max_cols=7, min_size=1))
def test_frobenius_roundtrip(lam):
    arms, legs = partition_to_frobenius(lam)
    assert frobenius_to_partition(arms, legs) == lam
    # arm/leg lengths strictly decrease
    assert all(x > y for x, y in zip(arms, arms[1:]))
    assert all(x > y for x, y in zip(legs, legs[1:]))


def test_frobenius_rejects_non_interlacing():
    with pytest.raises(ValueError):
        frobenius_to_partition((2, 2), (1, 0))
    with pytest.raises(ValueError):
        frobenius_to_partition((2,), (-1,))


def test_skew_shape_identity_is_the_pair():
    # same cells, different pair: still different shapes
    a = SkewShape((2, 2), (2, 1))
    b = SkewShape((3, 2), (3, 1))
    assert cells(a) == cells(b) == frozenset({(2, 2)})
    assert a != b
    # trailing zeros normalize away
    assert SkewShape((2, 1), (1,)) == SkewShape((2, 1), (1, 0))


def test_skew_cells_and_contents():
    s = SkewShape((3, 2), (1,))
    assert cells(s) == frozenset({(1, 2), (1, 3), (2, 1), (2, 2)})
    assert cont_set(s) == frozenset({1, 2, -1, 0})


@given(skew_shapes(max_rows=4, max_cols=5, min_cells=1))
def test_skew_from_cells_roundtrip(s):
    cs = cells(s)
    if not cs:
        return
    t = skew_from_cells(cs)
    assert cells(t) == cs
    assert contains(t.inner, t.outer)


def test_connected_components_order_and_partition():
    s = SkewShape((4, 4, 1), (2, 1))
    comps = connected_components(cells(s))
    assert len(comps) == 2
    # southwest component first (smaller minimum content)
    mins = [min(content(x) for x in comp) for comp in comps]
    assert mins == sorted(mins)
    got = set()
    for comp in comps:
        assert not (got & comp)
        got |= comp
    assert got == cells(s)


@given(skew_shapes(max_rows=4, max_cols=5, min_cells=1))
def test_connected_components_are_edge_connected(s):
    for comp in connected_components(cells(s)):
        seen = {next(iter(comp))}
        frontier = list(seen)
        while frontier:
            i, j = frontier.pop()
            for x in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if x in comp and x not in seen:
                    seen.add(x)
                    frontier.append(x)
        assert seen == comp


def test_disjoint_union_keeps_blocks_apart():
    a = SkewShape((2, 1))
    b = SkewShape((1,))
    u = disjoint_union_shape([a, b])
    assert len(cells(u)) == 4
    assert len(connected_components(cells(u))) == 2


def test_disjoint_union_of_one_is_itself():
    a = SkewShape((3, 1), (1,))
    assert disjoint_union_shape([a]) == a
