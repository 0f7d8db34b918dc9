"""The position-weighted Schur function as its defining determinant,
plus classical and factorial specializations and an SSYT oracle.

Every s-tilde value lives in the free ring: entry (i, j) of the matrix
is h_{lam_i - mu_j - i + j, mu_j - j + 1}, with h_{0,s} = 1 and
h_{r,s} = 0 for r < 0.  The result depends on where the shape sits
(the second index records the diagonal), but not on the matrix size n
once n covers all rows.
"""

from fractions import Fraction
from functools import lru_cache

from . import shapes
from .hring import HPoly, det_fraction, det_free, eval_hom
from .shapes import SkewShape, part, partition, skew_from_cells


def jt_entry(r, s):
    """h_{r,s} with the boundary conventions: 1 at r = 0, 0 below."""
    if r < 0:
        return HPoly.zero()
    if r == 0:
        return HPoly.one()
    return HPoly.gen(r, s)


def jt_matrix(s, n):
    lam, mu = s.outer, s.inner
    if max(len(lam), len(mu)) > n:
        raise ValueError("n=%d too small for %d rows" % (n, max(len(lam), len(mu))))
    M = []
    for i in range(1, n + 1):
        li = part(lam, i)
        row = []
        for j in range(1, n + 1):
            mj = part(mu, j)
            row.append(jt_entry(li - mj - i + j, mj - j + 1))
        M.append(row)
    return M


@lru_cache(maxsize=None)
def _schur9_det(outer, inner, n):
    return det_free(jt_matrix(SkewShape(outer, inner), n))


def schur9(s, n=None):
    """Free-ring determinant of a placed skew shape (or a partition,
    read as shape/empty).  n defaults to the row count; any larger n
    gives the same polynomial.  Inner not inside outer gives 0."""
    if not isinstance(s, SkewShape):
        s = SkewShape(partition(s), ())
    if n is None:
        n = max(len(s.outer), len(s.inner))
    return _schur9_det(s.outer, s.inner, n)


def schur9_slice(x, n=None):
    """Value of a slice: 0 when Undefined, 1 when Empty, otherwise the
    determinant of the sliced cells re-read as a minimal skew shape."""
    if x.kind == "undefined":
        return HPoly.zero()
    if x.kind == "empty":
        return HPoly.one()
    if x.kind == "invalid":
        raise ValueError("slice is not a skew shape")
    return schur9(skew_from_cells(x.cells), n)


def classical_hom(d, xs):
    """Assignment collapsing the position index: h_{r,s} goes to the
    complete homogeneous polynomial h_r(x_1..x_d)."""
    xs = tuple(Fraction(x) for x in xs)
    if len(xs) != d:
        raise ValueError("expected %d values, got %d" % (d, len(xs)))
    cache = {}

    def assign(pair):
        r = pair[0]
        v = cache.get(r)
        if v is None:
            H = [Fraction(1)] + [Fraction(0)] * r
            for x in xs:
                for m in range(1, r + 1):
                    H[m] += x * H[m - 1]
            v = cache[r] = H[r]
        return v

    return assign


def classical_value(s, xs):
    """Exact classical skew Schur value: the same determinant with the
    entries evaluated through classical_hom before expansion."""
    if not isinstance(s, SkewShape):
        s = SkewShape(partition(s), ())
    xs = tuple(Fraction(x) for x in xs)
    assign = classical_hom(len(xs), xs)
    n = max(len(s.outer), len(s.inner))
    if n == 0:
        return Fraction(1)
    M = []
    for i in range(1, n + 1):
        li = part(s.outer, i)
        row = []
        for j in range(1, n + 1):
            mj = part(s.inner, j)
            r = li - mj - i + j
            if r < 0:
                row.append(Fraction(0))
            elif r == 0:
                row.append(Fraction(1))
            else:
                row.append(assign((r, 0)))
        M.append(row)
    return det_fraction(M)


def ssyt_expand(s, d):
    """Monomial expansion of the classical skew Schur polynomial by
    brute-force semistandard fillings (rows weakly increase, columns
    strictly increase).  Guarded against combinatorial explosion."""
    if not isinstance(s, SkewShape):
        s = SkewShape(partition(s), ())
    cells = s.cells()
    if len(cells) > 14:
        raise ValueError("too many cells for the brute-force oracle")
    if d > 5:
        raise ValueError("too many variables for the brute-force oracle")
    if not shapes.contains(s.inner, s.outer):
        return {}
    order = sorted(cells)
    out = {}
    filling = {}

    def rec(t):
        if t == len(order):
            e = [0] * d
            for v in filling.values():
                e[v - 1] += 1
            key = tuple(e)
            out[key] = out.get(key, 0) + 1
            return
        i, j = order[t]
        lo = filling.get((i, j - 1), 1)
        up = filling.get((i - 1, j))
        if up is not None and up + 1 > lo:
            lo = up + 1
        for v in range(lo, d + 1):
            filling[(i, j)] = v
            rec(t + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


def ssyt_value(s, xs):
    """Evaluate the SSYT expansion at a rational point."""
    exp = ssyt_expand(s, len(xs))
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for e, c in exp.items():
        v = Fraction(c)
        for x, k in zip(xs, e):
            v *= x ** k
        total += v
    return total


def factorial_schur(lam, xs, avec):
    """Factorial Schur value: the alternant with column j built from
    the products (x_i - a_1)...(x_i - a_{lam_j + d - j}), divided by
    the Vandermonde determinant of the x's."""
    lam = partition(lam)
    xs = [Fraction(x) for x in xs]
    d = len(xs)
    if len(lam) > d:
        raise ValueError("partition needs at most %d rows" % d)
    if len(set(xs)) != d:
        raise ValueError("x values must be pairwise distinct")
    avec = [Fraction(a) for a in avec]
    need = lam[0] + d - 1 if lam else max(d - 1, 0)
    if len(avec) < need:
        raise ValueError("need at least %d shift parameters" % need)
    if d == 0:
        return Fraction(1)
    M = []
    for x in xs:
        row = []
        for j in range(1, d + 1):
            v = Fraction(1)
            for t in range(part(lam, j) + d - j):
                v *= x - avec[t]
            row.append(v)
        M.append(row)
    den = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            den *= xs[i] - xs[j]
    return det_fraction(M) / den
