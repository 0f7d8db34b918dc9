"""Border strips, cutting strips, and decompositions of placed shapes.

A border strip is a connected skew cell set with no 2x2 block: one cell
per content over a contiguous content interval [p, q], each consecutive
pair sharing an edge going right or up.  Cutting strips slice shapes
into border strips by diagonal shifts; the slice/glue operations here
carry all the position bookkeeping the determinant identities need.
"""

from dataclasses import dataclass

from . import shapes
from .shapes import (SkewShape, connected_components, content, part,
                     partition, skew_from_cells)


@dataclass(frozen=True)
class BorderStrip:
    cells: tuple

    def __post_init__(self):
        cs = tuple(sorted(self.cells, key=content))
        if not cs:
            raise ValueError("empty border strip")
        if any(i < 1 or j < 1 for i, j in cs):
            raise ValueError("cells must sit in the positive quadrant")
        for (i1, j1), (i2, j2) in zip(cs, cs[1:]):
            if (i2, j2) not in ((i1, j1 + 1), (i1 - 1, j1)):
                raise ValueError("consecutive contents must step right or up: %r -> %r"
                                 % ((i1, j1), (i2, j2)))
        object.__setattr__(self, "cells", cs)

    @property
    def p(self):
        return content(self.cells[0])

    @property
    def q(self):
        return content(self.cells[-1])

    def cell_at(self, c):
        if not self.p <= c <= self.q:
            raise ValueError("content %d outside [%d, %d]" % (c, self.p, self.q))
        return self.cells[c - self.p]

    def row_at(self, c):
        return self.cell_at(c)[0]

    def profile(self, a, b):
        """Step word over [a, b]: H for a rightward step, V for upward."""
        if a > b:
            raise ValueError("bad window")
        if not (self.p <= a and b <= self.q):
            raise ValueError("window [%d,%d] outside [%d,%d]" % (a, b, self.p, self.q))
        word = []
        for c in range(a, b):
            (i1, j1), (i2, j2) = self.cell_at(c), self.cell_at(c + 1)
            word.append("H" if (i2, j2) == (i1, j1 + 1) else "V")
        return "".join(word)

    def clip(self, a, b):
        """Cells with content in [a, b], intersected with the span."""
        lo, hi = max(a, self.p), min(b, self.q)
        if lo > hi:
            return ()
        return self.cells[lo - self.p: hi - self.p + 1]

    def translate(self, t):
        return BorderStrip(tuple((i + t, j + t) for i, j in self.cells))


def outer_strip(lam):
    """Cells of lam whose southeast diagonal neighbor is outside lam."""
    lam = partition(lam)
    if not lam:
        raise ValueError("outer strip of the empty partition")
    ell = len(lam)
    out = []
    for c in range(1 - ell, lam[0]):
        i = max(i for i in range(1, ell + 1) if part(lam, i) >= c + i >= 1)
        out.append((i, c + i))
    return BorderStrip(tuple(out))


def extended_outer_strip(lam, window):
    """The addable path of lam: one cell just outside lam per content.

    For contents adjacent to lam this is the outer strip pushed by
    (1,1); beyond lam's content span it continues along row 1 and
    column 1.  The window [lo, hi] bounds which contents are produced.
    """
    lo, hi = window
    if lo > hi:
        raise ValueError("bad window")
    lam = partition(lam)
    out = []
    if lam:
        base = outer_strip(lam)
        for c in range(lo, hi + 1):
            if c < base.p:
                out.append((1 - c, 1))
            elif c > base.q:
                out.append((1, c + 1))
            else:
                i, j = base.cell_at(c)
                out.append((i + 1, j + 1))
    else:
        out = [(1, c + 1) if c >= 0 else (1 - c, 1) for c in range(lo, hi + 1)]
    return BorderStrip(tuple(out))


@dataclass(frozen=True)
class StripSlice:
    """Content-window restriction: a strip/skew slice, Empty, Undefined,
    or (for general cell sets only) an invalid marker."""
    kind: str
    cells: tuple = ()

    @property
    def is_empty(self):
        return self.kind == "empty"

    @property
    def is_undefined(self):
        return self.kind == "undefined"


EMPTY_SLICE = StripSlice("empty")
UNDEFINED_SLICE = StripSlice("undefined")


def strip_slice(gamma, a, b):
    """gamma[a, b]: the cells with contents a..b; Empty when a = b+1,
    Undefined when a > b+1; out-of-span windows are an error."""
    if a > b + 1:
        return UNDEFINED_SLICE
    if a == b + 1:
        return EMPTY_SLICE
    if not (gamma.p <= a and b <= gamma.q):
        raise ValueError("slice [%d,%d] outside strip span [%d,%d]"
                         % (a, b, gamma.p, gamma.q))
    return StripSlice("strip", gamma.cells[a - gamma.p: b - gamma.p + 1])


def inner_strip(s):
    """Northwest boundary of a skew shape, completed along the outer strip
    of its outer partition so that the result spans that strip's contents."""
    if not shapes.contains(s.inner, s.outer):
        raise ValueError("inner strip needs inner contained in outer")
    cs = s.cells()
    if not cs:
        raise ValueError("inner strip of an empty shape")
    rho = {x for x in cs if (x[0] - 1, x[1] - 1) not in cs}
    have = {content(x): x for x in rho}
    lam0 = outer_strip(s.outer)
    out = [have.get(c, None) or lam0.cell_at(c) for c in range(lam0.p, lam0.q + 1)]
    return BorderStrip(tuple(out))


@dataclass(frozen=True)
class Decomposition:
    strips: tuple
    shifts: tuple
    gamma: object

    @property
    def k(self):
        return len(self.strips)

    @property
    def p(self):
        return tuple(st.p for st in self.strips)

    @property
    def q(self):
        return tuple(st.q for st in self.strips)

    def pairs(self):
        return tuple((st.p, st.q) for st in self.strips)


def decompose(s, gamma):
    """Cut a placed shape into border strips along diagonal shifts of gamma.

    Cells at diagonal offset t from gamma form translated slices of
    gamma; maximal content runs become the strips.  Strips come back
    sorted by q descending, then p descending, then shift.
    """
    cs = s.cells() if isinstance(s, SkewShape) else frozenset(s)
    if not cs:
        return Decomposition((), (), gamma)
    for x in cs:
        if not gamma.p <= content(x) <= gamma.q:
            raise ValueError("cutting strip does not span content %d" % content(x))
    groups = {}
    for x in cs:
        groups.setdefault(x[0] - gamma.row_at(content(x)), []).append(x)
    pieces = []
    for t, xs in groups.items():
        xs.sort(key=content)
        run = [xs[0]]
        for x in xs[1:]:
            if content(x) == content(run[-1]) + 1:
                run.append(x)
            else:
                pieces.append((t, run))
                run = [x]
        pieces.append((t, run))
    built = [(t, BorderStrip(tuple(r))) for t, r in pieces]
    built.sort(key=lambda ts: (-ts[1].q, -ts[1].p, ts[0]))
    return Decomposition(tuple(st for _, st in built), tuple(t for t, _ in built), gamma)


def lascoux_pragacz(s):
    """Decomposition of a skew shape along the outer strip of its outer
    partition."""
    if not shapes.contains(s.inner, s.outer):
        raise ValueError("needs inner contained in outer")
    if not s.outer:
        raise ValueError("empty outer partition")
    return decompose(s, outer_strip(s.outer))


def kreiman(s):
    """Decomposition of a skew shape along its inner strip."""
    if not shapes.contains(s.inner, s.outer):
        raise ValueError("needs inner contained in outer")
    if not s.cells():
        if not s.outer:
            raise ValueError("empty outer partition")
        return Decomposition((), (), outer_strip(s.outer))
    return decompose(s, inner_strip(s))


def is_compatible_strip(gamma, nu, lam):
    """Whether gamma can replace the outer strip of lam around each
    component of nu/lam: same step profile over the component's content
    window extended by one on each side."""
    nu, lam = partition(nu), partition(lam)
    if not shapes.contains(lam, nu):
        raise ValueError("needs lam contained in nu")
    diff = SkewShape(nu, lam).cells()
    if not diff:
        return True
    if not lam:
        return False
    lam0 = outer_strip(lam)
    if any(not lam0.p <= content(x) <= lam0.q for x in diff):
        return False
    for comp in connected_components(diff):
        a = min(content(x) for x in comp)
        b = max(content(x) for x in comp)
        if not (lam0.p <= a - 1 and b + 1 <= lam0.q):
            return False
        if not (gamma.p <= a - 1 and b + 1 <= gamma.q):
            return False
        if lam0.profile(a - 1, b + 1) != gamma.profile(a - 1, b + 1):
            return False
    return True


def is_compatible_partition(mu, nu, lam):
    """Whether the outer strip of lam and the addable path of mu agree
    (same step profile) over each component window of nu/lam, extended
    by one on each side.

    The margin steps matter: profile agreement at content c says c sits
    in both or neither of the diagonal sets of lam and mu, which keeps
    every swap endpoint of a lam/mu decomposition off the components'
    boundary diagonals; without it the determinant entries can collide
    with a component and the product identity fails."""
    mu, nu, lam = partition(mu), partition(nu), partition(lam)
    if not (shapes.contains(mu, lam) and shapes.contains(lam, nu)):
        raise ValueError("needs mu inside lam inside nu")
    diff = SkewShape(nu, lam).cells()
    if not diff:
        return True
    if not lam:
        return False
    lam0 = outer_strip(lam)
    for comp in connected_components(diff):
        a = min(content(x) for x in comp)
        b = max(content(x) for x in comp)
        if not (lam0.p <= a - 1 and b + 1 <= lam0.q):
            return False
        mplus = extended_outer_strip(mu, (a - 1, b + 1))
        if lam0.profile(a - 1, b + 1) != mplus.profile(a - 1, b + 1):
            return False
    return True


@dataclass(frozen=True)
class GluedShape:
    """A cutting strip with the components of nu/lam fused onto it."""
    gamma: object
    components: tuple
    glued: tuple

    @property
    def cells(self):
        out = set(self.gamma.cells)
        for g in self.glued:
            out |= g
        return frozenset(out)

    def origin(self, cell):
        for s, g in enumerate(self.glued):
            if cell in g:
                return ("component", s)
        if cell in self.gamma.cells:
            return ("gamma", None)
        raise ValueError("cell not in glued shape")


def glue(gamma, nu, lam):
    """Fuse each component of nu/lam onto gamma, preserving its position
    relative to the strip (the offset that carried the outer strip of
    lam to gamma carries the component along)."""
    if not is_compatible_strip(gamma, nu, lam):
        raise ValueError("cutting strip is not compatible with nu/lam")
    diff = SkewShape(nu, lam).cells()
    comps = connected_components(diff) if diff else []
    if not comps:
        return GluedShape(gamma, (), ())
    lam0 = outer_strip(lam)
    glued = []
    for comp in comps:
        offs = {gamma.row_at(content(x)) - lam0.row_at(content(x)) for x in comp}
        if len(offs) != 1:
            raise ValueError("glue offset not constant across a component")
        d = offs.pop()
        glued.append(frozenset((i + d, j + d) for i, j in comp))
    occupied = set(gamma.cells)
    for g in glued:
        if occupied & g:
            raise ValueError("glued component overlaps the strip")
        occupied |= g
    for g in glued:
        # each fused component must share at least one edge with the strip
        edges = {(i + di, j + dj) for i, j in g for di, dj in ((0, 1), (0, -1), (1, 0), (-1, 0))}
        if not edges & set(gamma.cells):
            raise ValueError("glued component does not touch the strip")
    return GluedShape(gamma, tuple(comps), tuple(glued))


def skew_slice(g, a, b):
    """Content-window restriction of a glued shape, skew shape, or raw
    cell set.  Follows the strip slice conventions for empty/undefined
    windows; a slice that is not a skew cell set comes back with kind
    "invalid" rather than raising."""
    if a > b + 1:
        return UNDEFINED_SLICE
    if a == b + 1:
        return EMPTY_SLICE
    if isinstance(g, GluedShape):
        cs = g.cells
    elif isinstance(g, SkewShape):
        cs = g.cells()
    else:
        cs = frozenset(g)
    sub = frozenset(x for x in cs if a <= content(x) <= b)
    if not sub:
        raise ValueError("slice [%d,%d] misses the shape entirely" % (a, b))
    if not shapes.is_skew_cellset(sub):
        return StripSlice("invalid", tuple(sorted(sub)))
    return StripSlice("skew", tuple(sorted(sub)))


def _extreme_corners(alpha, beta):
    ca, cb = alpha.cells(), beta.cells()
    if not ca or not cb:
        raise ValueError("attach needs nonempty shapes")
    a = max(ca, key=content)
    b = min(cb, key=content)
    if content(b) != content(a) + 1:
        raise ValueError("corner contents must differ by exactly 1")
    return a, b


def _attach(alpha, beta, target):
    b = min(beta.cells(), key=content)
    dr = target[0] - b[0]
    dc = target[1] - b[1]
    assert dr == dc, "corner condition makes the move diagonal"
    moved = {(i + dr, j + dc) for i, j in beta.cells()}
    un = set(alpha.cells()) | moved
    if len(un) != len(alpha.cells()) + len(moved):
        raise ValueError("attachment overlaps")
    t = max(1 - min(i for i, _ in un), 1 - min(j for _, j in un), 0)
    return skew_from_cells({(i + t, j + t) for i, j in un})


def attach_right(alpha, beta):
    """Place beta so its minimum-content corner sits right of alpha's
    maximum-content corner."""
    a, _ = _extreme_corners(alpha, beta)
    return _attach(alpha, beta, (a[0], a[1] + 1))


def attach_above(alpha, beta):
    """Place beta so its minimum-content corner sits above alpha's
    maximum-content corner."""
    a, _ = _extreme_corners(alpha, beta)
    return _attach(alpha, beta, (a[0] - 1, a[1]))


def structural_modify(lam, n, a, b):
    """lam(a, b) built on the boundary: remove the outer-strip run
    (b, a] when a > b, or add the addable-path run (a, b] when a < b.

    Agrees with shapes.modify; kept separate so the agreement is a
    testable fact rather than a definition.
    """
    lam = partition(lam)
    C = shapes.c_n_set(lam, n)
    if a not in C:
        raise ValueError("a=%d not in the content set" % a)
    if b != a and b in C:
        raise ValueError("b=%d already in the content set" % b)
    if b < -n:
        raise ValueError("b=%d below -n" % b)
    if a == b:
        return lam
    if a > b:
        sl = strip_slice(outer_strip(lam), b + 1, a)
        cs = shapes.partition_cells(lam) - set(sl.cells)
    else:
        add = extended_outer_strip(lam, (a + 1, b))
        cs = shapes.partition_cells(lam) | set(add.cells)
    byrow = {}
    for i, j in cs:
        byrow.setdefault(i, set()).add(j)
    rows = [0] * (max(byrow) if byrow else 0)
    for i, js in byrow.items():
        if js != set(range(1, len(js) + 1)):
            raise ValueError("boundary move does not leave a partition")
        rows[i - 1] = len(js)
    return partition(rows)


def lemma62_construct(gamma, avec, bvec):
    """Build a skew shape whose gamma-decomposition has the prescribed
    endpoint pairs: strip t is a diagonal translate of gamma[p_t, q_t].

    avec and bvec must be strictly increasing with a_i <= b_i; the
    pairing of each a with a b follows a two-case recursion on whether
    the strip step above the smallest b is horizontal or vertical.
    Returns (shape, decomposition).
    """
    a, b = list(avec), list(bvec)
    if len(a) != len(b) or not a:
        raise ValueError("need equal-length nonempty sequences")
    for v in (a, b):
        if any(x >= y for x, y in zip(v, v[1:])):
            raise ValueError("sequences must strictly increase")
        if any(not gamma.p <= x <= gamma.q for x in v):
            raise ValueError("endpoints must lie in the strip's span")
    if any(x > y for x, y in zip(a, b)):
        raise ValueError("infeasible endpoint sequences")
    placed = _build_strips(gamma, a, b)
    return _realize(gamma, placed)


def _realize(gamma, placed):
    cells = set()
    for t, p, q in placed:
        piece = {(i + t, j + t) for i, j in strip_slice(gamma, p, q).cells}
        if cells & piece:
            raise AssertionError("constructed strips overlap")
        cells |= piece
    norm = max(1 - min(i for i, _ in cells), 1 - min(j for _, j in cells), 0)
    cells = {(i + norm, j + norm) for i, j in cells}
    shape = skew_from_cells(cells)
    dec = decompose(shape, gamma)
    want = sorted((p, q) for _, p, q in placed)
    got = sorted(dec.pairs())
    if want != got:
        raise AssertionError("round trip failed: %r vs %r" % (want, got))
    return shape, dec


def _build_strips(gamma, a, b):
    for placed in _assemblies(gamma, a, b):
        return placed
    raise AssertionError("no skew assembly for endpoint sequences %r, %r" % (a, b))


def _assemblies(gamma, a, b):
    """Yield strip placements (shift, p, q) realizing left endpoint set a
    and right endpoint set b, smallest right endpoint paired and attached
    last.  A horizontal step just past that endpoint prefers the smallest
    left endpoint and attaches below; a vertical step prefers the largest
    left endpoint that fits and attaches above.  Neither the preferred
    pairing nor any single shift is always realizable, so both choices
    backtrack, each candidate checked by decomposing the union."""
    if len(a) == 1:
        yield [(0, a[0], b[0])]
        return
    b1 = b[0]
    horiz = gamma.profile(b1, b1 + 1) == "H"
    cands = [x for x in a if x <= b1]
    if not horiz:
        cands = cands[::-1]
    reach = (gamma.q - gamma.p + 1) + len(a) + 2
    for p in cands:
        ra = [x for x in a if x != p]
        for sigma in _assemblies(gamma, ra, b[1:]):
            lo = min(s for s, _, _ in sigma)
            hi = max(s for s, _, _ in sigma)
            nominal = hi + 1 if horiz else lo - 1
            for t in sorted(range(lo - reach, hi + reach + 1),
                            key=lambda u: (abs(u - nominal), u)):
                trial = sigma + [(t, p, b1)]
                if _assembles(gamma, trial):
                    yield trial


def _assembles(gamma, placed):
    cells = set()
    for t, p, q in placed:
        piece = {(i + t, j + t) for i, j in strip_slice(gamma, p, q).cells}
        if cells & piece:
            return False
        cells |= piece
    norm = max(1 - min(i for i, _ in cells), 1 - min(j for _, j in cells), 0)
    cells = {(i + norm, j + norm) for i, j in cells}
    if not shapes.is_skew_cellset(cells):
        return False
    dec = decompose(skew_from_cells(cells), gamma)
    return sorted(dec.pairs()) == sorted((p, q) for _, p, q in placed)


class ConverseResult:
    """Sign and single-shape form for a slice determinant; iterable as
    (sign, rho) with sign 0 and rho None for a vanishing determinant."""

    def __init__(self, sign, rho, blocks=None, verdict=None):
        self.sign = sign
        self.rho = rho
        self.blocks = blocks or []
        self.verdict = verdict or ("Zero" if sign == 0 else "Product")

    def __iter__(self):
        return iter((self.sign, self.rho))

    @property
    def all_compat(self):
        """Whether every block was realized with the partition
        compatibility that the product theorem's hypotheses demand; the
        claimed sign and shape are only guaranteed when this holds."""
        return all(info.get("compat", True) for info in self.blocks)


def converse_construct(alpha, avec, bvec):
    """Express det(s_(alpha[a_j, b_i])) as sign times a single skew shape.

    alpha must be connected with every window slice a valid skew cell
    set.  Repeated endpoints or an endpoint deficit (some integer a with
    |{a_i <= a+1}| < |{b_i <= a}|) force a vanishing determinant (sign
    0).  Otherwise, after sorting, indices with a_t = b_t+1 contribute
    unit pivots that split the matrix into blocks; each block is rebuilt
    as a cutting-strip decomposition and contributes its own product of
    shapes, assembled into one disconnected skew shape.
    """
    a_in, b_in = list(avec), list(bvec)
    k = len(a_in)
    if len(b_in) != k or k == 0:
        raise ValueError("need equal-length nonempty sequences")
    acells = alpha.cells()
    if not acells or len(connected_components(acells)) != 1:
        raise ValueError("alpha must be nonempty and connected")
    conts = alpha.cont_set()
    for v in (a_in, b_in):
        if any(c not in conts for c in v):
            raise ValueError("endpoints must be contents of alpha")
    for ai in a_in:
        for bi in b_in:
            if skew_slice(acells, ai, bi).kind == "invalid":
                raise ValueError("slice alpha[%d,%d] is not a skew shape" % (ai, bi))

    if len(set(a_in)) != k or len(set(b_in)) != k:
        return ConverseResult(0, None)
    a = sorted(a_in)
    b = sorted(b_in)
    lim = range(min(a + b) - 1, max(a + b) + 1)
    if any(sum(1 for x in a if x <= c + 1) < sum(1 for x in b if x <= c) for c in lim):
        return ConverseResult(0, None)

    sign = _sort_sign(a_in) * _sort_sign(b_in)
    # indices with a_t = b_t + 1 are unit pivots: the rest of their row
    # and column consists of empty or undefined windows, so they drop
    # out of the determinant
    keep = [t for t in range(k) if a[t] != b[t] + 1]
    # a left endpoint clearing the previous right endpoint by more than
    # one zeroes out a whole corner of the matrix, splitting the
    # determinant into independent diagonal blocks
    blocks, cur = [], []
    for t in keep:
        if cur and a[t] > b[cur[-1]] + 1:
            blocks.append(cur)
            cur = []
        cur.append(t)
    if cur:
        blocks.append(cur)

    pieces = []
    infos = []
    for idx in blocks:
        bsign, bpieces, binfo = _converse_block(alpha, [a[t] for t in idx], [b[t] for t in idx])
        sign *= bsign
        pieces.extend(bpieces)
        infos.append(binfo)
    rho = shapes.disjoint_union_shape(pieces)
    return ConverseResult(sign, rho, infos)


def _sort_sign(seq):
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    inv = sum(1 for i in range(len(order)) for j in range(i + 1, len(order))
              if order[i] > order[j])
    return -1 if inv & 1 else 1


def _converse_block(alpha, a, b):
    """One irreducible block: a, b ascending with a_t <= b_t and
    a_{t+1} <= b_t + 1 throughout.

    Not every skew shape realizing the endpoint sets admits the visible
    pieces of alpha as attachments, so the realizations are searched;
    one whose inner shape also passes the partition compatibility test
    is preferred, with a fallback to any realization whose glued slices
    reproduce alpha's slices (which is all the slice determinant sees).
    """
    gamma = inner_strip(alpha)
    w_lo, w_hi = a[0], b[-1]
    extra = alpha.cells() - set(gamma.cells)
    visible = []
    for comp in connected_components(extra) if extra else []:
        # only the cells inside the outermost window ever meet a matrix
        # entry; clip the rest away before attaching
        clip = {x for x in comp if w_lo <= content(x) <= w_hi}
        if clip:
            visible.extend(connected_components(clip))

    fallback = None
    reason = "no skew realization of the endpoint sets"
    for tried, placed in enumerate(_assemblies(gamma, a, b)):
        if tried >= 200:
            break
        built = _attach_block(alpha, gamma, placed, a, visible)
        if isinstance(built, str):
            reason = built
            continue
        if built["compat"]:
            return _finish_block(a, built)
        fallback = fallback or built
    if fallback is not None:
        return _finish_block(a, fallback)
    raise ValueError("block construction failed: %s" % reason)


def _attach_block(alpha, gamma, placed, a, visible):
    shape, dec = _realize(gamma, placed)
    lam, mu = shape.outer, shape.inner
    lam0 = outer_strip(lam)

    nu_cells = set(shapes.partition_cells(lam))
    for comp in visible:
        offs = {lam0.row_at(content(x)) - gamma.row_at(content(x))
                for x in comp if lam0.p <= content(x) <= lam0.q}
        if len(offs) != 1:
            return "component does not attach at a constant offset"
        d = offs.pop()
        add = {(i + d, j + d) for i, j in comp}
        if add & nu_cells or any(i < 1 or j < 1 for i, j in add):
            return "attached component collides with the base shape"
        nu_cells |= add
    byrow = {}
    for i, j in nu_cells:
        byrow.setdefault(i, set()).add(j)
    nu = [0] * max(byrow)
    for i, js in byrow.items():
        if js != set(range(1, len(js) + 1)):
            return "attached components do not form a partition"
        nu[i - 1] = len(js)
    nu = partition(nu)

    if not is_compatible_strip(gamma, nu, lam):
        return "cutting strip incompatible with the attached components"
    g = glue(gamma, nu, lam)
    for qi in dec.q:
        for pj in dec.p:
            want = skew_slice(alpha.cells(), pj, qi)
            got = skew_slice(g, pj, qi)
            if (want.kind, want.cells) != (got.kind, got.cells):
                return "glued slice [%d,%d] differs from alpha's" % (pj, qi)

    comps = connected_components(SkewShape(nu, lam).cells()) if nu != lam else []
    rvals = []
    for comp in comps:
        lo = min(content(x) for x in comp)
        hi = max(content(x) for x in comp)
        r = sum(1 for (p_, q_) in dec.pairs() if p_ <= lo and hi <= q_)
        if r == 0:
            return "component covered by no strip; product form needs r >= 1"
        rvals.append(r)

    return {"lam": lam, "mu": mu, "nu": nu, "dec": dec,
            "comps": comps, "rvals": rvals,
            "compat": is_compatible_partition(mu, nu, lam)}


def _finish_block(a, built):
    lam, mu, nu, dec = built["lam"], built["mu"], built["nu"], built["dec"]
    k = len(a)
    pieces = [SkewShape(nu, mu)]
    for comp, r in zip(built["comps"], built["rvals"]):
        piece = skew_from_cells(comp)
        pieces.extend([piece] * (r - 1))
    perm = [sorted(a).index(pj) for pj in dec.p]
    bsign = (-1 if (k * (k - 1) // 2) & 1 else 1) * _perm_sign(perm)
    info = {"lam": lam, "mu": mu, "nu": nu, "pairs": dec.pairs(),
            "r": tuple(built["rvals"]), "compat": built["compat"]}
    return bsign, pieces, info


def _perm_sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return -1 if inv & 1 else 1
