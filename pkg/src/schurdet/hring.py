"""Exact arithmetic in the free commutative ring Z[h[r,s]].

Monomials are tuples of (r, s) pairs sorted lexicographically; a
polynomial is a dict mapping monomials to nonzero integer coefficients.
Also: exact rationals, a division-free determinant for ring entries, a
rational determinant for numeric matrices, and row-selection minors of
integer matrices.
"""

import hashlib
from fractions import Fraction

Rat = Fraction

DET_FREE_CAP = 12


class HPoly:
    """Sparse polynomial in the h[r,s] generators with int coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero():
        return HPoly({})

    @staticmethod
    def one():
        return HPoly({(): 1})

    @staticmethod
    def const(c):
        return HPoly({(): c} if c else {})

    @staticmethod
    def gen(r, s):
        if r < 1:
            raise ValueError("generators need r >= 1")
        return HPoly({((r, s),): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = HPoly.const(other)
        return isinstance(other, HPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = HPoly.const(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return HPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return HPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return HPoly.zero()
            return HPoly({m: c * other for m, c in self.terms.items()})
        a, b = self.terms, other.terms
        if not a or not b:
            return HPoly.zero()
        if b == {(): 1}:
            return HPoly(dict(a))
        if a == {(): 1}:
            return HPoly(dict(b))
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return HPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = HPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            body = "·".join("h[%d,%d]" % p for p in m) or "1"
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if (mag == 1 and m) else str(mag) + ("·" if m else "")
            bits.append("%s%s%s" % (sign, coef, body))
        s = "".join(bits)
        return s[1:] if s.startswith("+") else s

    __repr__ = __str__


def as_hpoly(x):
    if isinstance(x, HPoly):
        return x
    if isinstance(x, int):
        return HPoly.const(x)
    raise TypeError("not a ring element: %r" % (x,))


def add(p, q):
    return as_hpoly(p) + as_hpoly(q)


def mul(p, q):
    return as_hpoly(p) * as_hpoly(q)


def neg(p):
    return -as_hpoly(p)


def pow_(p, e):
    return as_hpoly(p) ** e


def det_free(M):
    """Division-free determinant of a square matrix of ring elements.

    Memoized Laplace expansion over column subsets; zero entries and
    zero minors are pruned.  Rows are internally reordered (sparsest
    first) with the permutation sign tracked.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n > DET_FREE_CAP:
        raise ValueError("det_free capped at %d, got %d" % (DET_FREE_CAP, n))
    if n == 0:
        return HPoly.one()
    rows = [[as_hpoly(x) for x in row] for row in M]
    order = sorted(range(n), key=lambda i: sum(len(x.terms) for x in rows[i]))
    par = _perm_sign(order)
    rows = [rows[i] for i in order]

    prev = {0: HPoly.one()}
    for m in range(n):
        nz = [(1 << j, j, rows[m][j]) for j in range(n) if rows[m][j].terms]
        level = -1 if m & 1 else 1
        cur = {}
        for mask, sub in prev.items():
            if sub.is_zero():
                continue
            for bit, j, e in nz:
                if mask & bit:
                    continue
                # cofactor sign: (-1)^(m + position of j within the new subset)
                pos = bin(mask & (bit - 1)).count("1")
                s = level if pos % 2 == 0 else -level
                contrib = e * sub
                if s < 0:
                    contrib = contrib * -1
                nm = mask | bit
                acc = cur.get(nm)
                cur[nm] = contrib if acc is None else acc + contrib
        prev = {k: v for k, v in cur.items() if not v.is_zero()}
        if not prev:
            return HPoly.zero()
    full = (1 << n) - 1
    out = prev.get(full, HPoly.zero())
    return out if par == 1 else out * -1


def _perm_sign(perm):
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def eval_hom(p, assign):
    """Evaluate p under a generator assignment (r,s) -> Rat."""
    f = assign.__getitem__ if isinstance(assign, dict) else assign
    cache = {}
    total = Fraction(0)
    for m, c in p.terms.items():
        v = Fraction(c)
        for pair in m:
            w = cache.get(pair)
            if w is None:
                try:
                    w = Fraction(f(pair))
                except KeyError:
                    raise ValueError("unbound generator h[%d,%d]" % pair)
                cache[pair] = w
            v *= w
        total += v
    return total


def collapse(p):
    """Ring map forgetting the position index: every h[r,s] goes to
    h[r,0].  Images of equal free-ring elements are equal, so this turns
    a free-ring identity check into a (weaker, much smaller) classical
    one; the reverse direction does not hold."""
    p = as_hpoly(p)
    out = {}
    for m, c in p.terms.items():
        key = tuple(sorted((r, 0) for r, _ in m))
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return HPoly(out)


def fingerprint(p):
    """(term count, sum |coeff|, 64-bit hash of the canonical form)."""
    p = as_hpoly(p)
    items = sorted(p.terms.items())
    h = hashlib.blake2b(digest_size=8)
    for m, c in items:
        h.update(repr((m, c)).encode())
    return (len(items), sum(abs(c) for _, c in items), h.hexdigest())


def det_fraction(M):
    """Exact determinant of a square matrix of rationals."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def det_int(M):
    d = det_fraction(M)
    assert d.denominator == 1
    return d.numerator


class IndexedMatrix:
    """Integer matrix whose rows are indexed over a range lo..hi."""

    def __init__(self, lo, rows):
        self.lo = lo
        self.rows = [tuple(r) for r in rows]
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged rows")

    @property
    def hi(self):
        return self.lo + len(self.rows) - 1

    @property
    def width(self):
        return len(self.rows[0]) if self.rows else 0

    def row(self, i):
        if not self.lo <= i <= self.hi:
            raise ValueError("row index %d outside %d..%d" % (i, self.lo, self.hi))
        return self.rows[i - self.lo]


def minor(M, avec):
    """Determinant of the rows selected by avec, in the listed order.

    A repeated index gives 0 (two equal rows).
    """
    avec = list(avec)
    if len(avec) != M.width:
        raise ValueError("need exactly %d row indices" % M.width)
    return det_int([M.row(a) for a in avec])
