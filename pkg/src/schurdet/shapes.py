"""Partitions, cells, and placed skew shapes.

Cells are 1-based (row, col) pairs in matrix coordinates; the content of
a cell (i, j) is j - i.  A skew shape is an ordered pair of partitions
(outer, inner).  The pair is the identity of the shape: two pairs with
the same cell set are different shapes unless stated otherwise, because
most of this library is position sensitive.
"""

from dataclasses import dataclass


def partition(seq):
    """Canonicalize a weakly decreasing sequence of nonnegative ints."""
    lam = tuple(int(x) for x in seq)
    for x, y in zip(lam, lam[1:]):
        if x < y:
            raise ValueError("not weakly decreasing: %r" % (seq,))
    if lam and lam[-1] < 0:
        raise ValueError("negative part: %r" % (seq,))
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def part(lam, i):
    """i-th part of lam (1-based), zero beyond the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def content(cell):
    i, j = cell
    return j - i


def contains_cell(lam, cell):
    i, j = cell
    return i >= 1 and 1 <= j <= part(lam, i)


def contains(mu, lam):
    """True if mu is contained in lam, part by part."""
    return all(part(mu, i) <= part(lam, i) for i in range(1, len(mu) + 1))


def partition_cells(lam):
    return frozenset((i, j) for i in range(1, len(lam) + 1)
                     for j in range(1, lam[i - 1] + 1))


@dataclass(frozen=True)
class SkewShape:
    """Ordered pair of partitions; inner need not sit inside outer."""
    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))

    def cells(self):
        return cells(self)

    def cont_set(self):
        return cont_set(self)

    def size(self):
        return len(self.cells())


def cells(s):
    """Placed cell set of a skew shape: cells of outer not in inner."""
    out = set()
    for i in range(1, len(s.outer) + 1):
        for j in range(part(s.inner, i) + 1, s.outer[i - 1] + 1):
            out.add((i, j))
    return frozenset(out)


def cont_set(s):
    return frozenset(content(x) for x in cells(s))


def connected_components(s):
    """Edge-connected components of a shape or placed cell set.

    Components come back southwest to northeast (ordered by minimum
    content, with the placed cells as a final tie-break).
    """
    cs = cells(s) if isinstance(s, SkewShape) else frozenset(s)
    seen = set()
    comps = []
    for start in cs:
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            i, j = queue.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cs and nb not in comp:
                    comp.add(nb)
                    queue.append(nb)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (min(content(x) for x in c), sorted(c)))
    return comps


def c_n_set(lam, n):
    """The set {lam_i - i : 1 <= i <= n}; needs n >= len(lam)."""
    lam = partition(lam)
    if n < len(lam):
        raise ValueError("n=%d smaller than length of %r" % (n, lam))
    return frozenset(part(lam, i) - i for i in range(1, n + 1))


def partition_from_set(C, n):
    """Inverse of c_n_set: recover the partition from its content set."""
    C = sorted(C, reverse=True)
    if len(C) != n:
        raise ValueError("need exactly n distinct values")
    if C and C[-1] < -n:
        raise ValueError("minimum below -n; not a partition on n rows")
    lam = [c + i for i, c in enumerate(C, start=1)]
    return partition(lam)


def modify(lam, n, a, b):
    """The operation lam(a, b): swap a out of the n-content set, b in."""
    C = c_n_set(lam, n)
    if a not in C:
        raise ValueError("a=%d not in the content set" % a)
    if b != a and b in C:
        raise ValueError("b=%d already in the content set" % b)
    if b < -n:
        raise ValueError("b=%d below -n" % b)
    return partition_from_set((C - {a}) | {b}, n)


def conjugate(lam):
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def frobenius_to_partition(arms, legs):
    """Build the partition with diagonal hooks (arms | legs)."""
    arms, legs = tuple(arms), tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arm/leg length mismatch")
    for v in (arms, legs):
        if any(x < 0 for x in v) or any(x <= y for x, y in zip(v, v[1:])):
            raise ValueError("coordinates must strictly decrease and be >= 0")
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    col_rows = [legs[j] + j + 1 for j in range(d)]
    # rows below the diagonal are forced by the column lengths
    extra = {}
    for j in range(d):
        for i in range(d + 1, col_rows[j] + 1):
            extra[i] = max(extra.get(i, 0), j + 1)
    if extra and (min(extra) != d + 1 or sorted(extra) != list(range(d + 1, max(extra) + 1))):
        raise ValueError("inconsistent Frobenius coordinates")
    lam = rows + [extra[i] for i in sorted(extra)]
    lam = partition(lam)
    if partition_to_frobenius(lam) != (arms, legs):
        raise ValueError("inconsistent Frobenius coordinates")
    return lam


def partition_to_frobenius(lam):
    lam = partition(lam)
    conj = conjugate(lam)
    d = sum(1 for i in range(1, len(lam) + 1) if lam[i - 1] >= i)
    arms = tuple(lam[i] - i - 1 for i in range(d))
    legs = tuple(conj[i] - i - 1 for i in range(d))
    return arms, legs


def shift(cellset, r, t):
    """Translate a placed cell set by r rows down and t columns right."""
    return frozenset((i + r, j + t) for i, j in cellset)


def is_skew_cellset(cs):
    """Whether a placed cell set is the cell set of some skew pair.

    Rows must be contiguous runs; adjacent nonempty rows must have both
    endpoints weakly decreasing downward; nonempty rows separated by an
    empty row must be strictly southwest of each other.
    """
    cs = frozenset(cs)
    if not cs:
        return True
    if any(i < 1 or j < 1 for i, j in cs):
        return False
    byrow = {}
    for i, j in cs:
        byrow.setdefault(i, []).append(j)
    spans = {}
    for i, js in byrow.items():
        lo, hi = min(js), max(js)
        if len(js) != hi - lo + 1:
            return False
        spans[i] = (lo, hi)
    rows = sorted(spans)
    for r1, r2 in zip(rows, rows[1:]):
        lo1, hi1 = spans[r1]
        lo2, hi2 = spans[r2]
        if r2 == r1 + 1:
            if lo2 > lo1 or hi2 > hi1:
                return False
        else:
            if hi2 >= lo1:
                return False
    return True


def skew_from_cells(cs):
    """Minimal (outer, inner) pair whose cell set is cs, at its position."""
    cs = frozenset(cs)
    if not cs:
        return SkewShape((), ())
    if not is_skew_cellset(cs):
        raise ValueError("not the cell set of a skew shape: %r" % sorted(cs))
    byrow = {}
    for i, j in cs:
        byrow.setdefault(i, []).append(j)
    nrows = max(byrow)
    outer = [0] * (nrows + 1)
    inner = [0] * (nrows + 1)
    for i in range(nrows, 0, -1):
        if i in byrow:
            outer[i] = max(byrow[i])
            inner[i] = min(byrow[i]) - 1
        else:
            outer[i] = inner[i] = outer[i + 1] if i < nrows else 0
    return SkewShape(tuple(outer[1:]), tuple(inner[1:]))


def disjoint_union_shape(shapes):
    """One skew shape whose components are the given shapes, NE to SW.

    Each input is re-placed: widths get two empty diagonals between
    blocks so components never interact.  Only useful where position
    does not matter (classical specializations).
    """
    blocks = []
    for s in shapes:
        cs = s.cells() if isinstance(s, SkewShape) else frozenset(s)
        if cs:
            blocks.append(cs)
    if not blocks:
        return SkewShape((), ())
    norm = []
    for cs in blocks:
        r0 = min(i for i, _ in cs)
        c0 = min(j for _, j in cs)
        norm.append(frozenset((i - r0 + 1, j - c0 + 1) for i, j in cs))
    widths = [max(j for _, j in cs) for cs in norm]
    heights = [max(i for i, _ in cs) for cs in norm]
    out = set()
    row_off = 0
    for t, cs in enumerate(norm):
        col_off = sum(w + 1 for w in widths[t + 1:])
        out |= {(i + row_off, j + col_off) for i, j in cs}
        row_off += heights[t]
    return skew_from_cells(out)
