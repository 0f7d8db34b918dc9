"""Free-ring arithmetic, determinants, evaluation, and fingerprints."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurdet import (HPoly, IndexedMatrix, collapse, det_fraction, det_free,
                      det_int, eval_hom, fingerprint, minor)
from schurdet.hring import DET_FREE_CAP, as_hpoly

from conftest import rational_points


@st.composite
def hpolys(draw):
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        n_gens = draw(st.integers(0, 3))
        mon = tuple(sorted((draw(st.integers(1, 4)), draw(st.integers(-2, 2)))
                           for _ in range(n_gens)))
        c = draw(st.integers(-5, 5))
        if c:
            terms[mon] = terms.get(mon, 0) + c
    return HPoly({m: c for m, c in terms.items() if c})


def test_constructors_and_equality():
    assert HPoly.zero().is_zero()
    assert not HPoly.one().is_zero()
    assert HPoly.const(0) == HPoly.zero()
    assert HPoly.const(3) == HPoly.one() * 3
    assert HPoly.gen(2, -1) != HPoly.gen(2, 0)
    assert str(HPoly.gen(1, 2)) == "h[1,2]"
    assert bool(HPoly.gen(1, 0)) and not bool(HPoly.zero())


def test_integers_coerce():
    p = HPoly.gen(1, 0)
    assert p + 0 == p
    assert 1 + p == p + HPoly.one()
    assert 2 * p == p + p
    assert p - p == HPoly.zero()


@given(hpolys(), hpolys(), hpolys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + HPoly.zero() == p
    assert p * HPoly.one() == p
    assert p + (-p) == HPoly.zero()


@given(hpolys(), st.integers(0, 3))
def test_pow_matches_repeated_product(p, e):
    expect = HPoly.one()
    for _ in range(e):
        expect = expect * p
    assert p ** e == expect


@given(hpolys(), hpolys())
def test_collapse_is_a_ring_map(p, q):
    assert collapse(p + q) == collapse(p) + collapse(q)
    assert collapse(p * q) == collapse(p) * collapse(q)
    assert collapse(HPoly.one()) == HPoly.one()
    assert collapse(HPoly.gen(3, -2)) == HPoly.gen(3, 0)


@given(hpolys(), hpolys(), rational_points(3))
def test_eval_hom_is_a_ring_map(p, q, xs):
    def assign(pair):
        r, s = pair
        return xs[0] * r + xs[1] * s + xs[2]

    assert eval_hom(p + q, assign) == eval_hom(p, assign) + eval_hom(q, assign)
    assert eval_hom(p * q, assign) == eval_hom(p, assign) * eval_hom(q, assign)
    assert eval_hom(HPoly.one(), assign) == 1


def test_eval_hom_rejects_unbound_generator():
    with pytest.raises(ValueError):
        eval_hom(HPoly.gen(1, 0), {(2, 0): 1})


def test_det_free_small_goldens():
    a, b, c, d = (HPoly.gen(1, 0), HPoly.gen(1, 1),
                  HPoly.gen(2, 0), HPoly.gen(2, 1))
    assert det_free([]) == HPoly.one()
    assert det_free([[a]]) == a
    assert det_free([[a, b], [c, d]]) == a * d - b * c


def test_det_free_row_swap_flips_sign():
    M = [[HPoly.gen(1, 0), HPoly.gen(2, 0)],
         [HPoly.gen(1, 1), HPoly.gen(2, 1)]]
    assert det_free([M[1], M[0]]) == det_free(M) * -1


def test_det_free_repeated_row_is_zero():
    row = [HPoly.gen(1, 0), HPoly.gen(2, 0)]
    assert det_free([row, row]).is_zero()


def test_det_free_rejects_shape_problems():
    with pytest.raises(ValueError):
        det_free([[HPoly.one()], [HPoly.one()]])
    big = [[HPoly.one()] * (DET_FREE_CAP + 1) for _ in range(DET_FREE_CAP + 1)]
    with pytest.raises(ValueError):
        det_free(big)


@given(st.integers(0, 2**32), st.integers(2, 4))
@settings(max_examples=30)
def test_det_free_matches_fraction_det_after_evaluation(seed, n):
    import random
    rng = random.Random(seed)
    M = [[HPoly.gen(rng.randint(1, 3), rng.randint(-1, 1)) * rng.randint(-2, 2)
          for _ in range(n)] for _ in range(n)]

    def assign(pair):
        return Fraction(hash(pair) % 23 - 11, 1 + hash(pair) % 5)

    lhs = eval_hom(det_free(M), assign)
    rhs = det_fraction([[eval_hom(x, assign) for x in row] for row in M])
    assert lhs == rhs


@given(hpolys())
def test_collapse_commutes_with_determinants(p):
    M = [[p, HPoly.gen(1, 1)], [HPoly.gen(2, -1), HPoly.gen(1, 0)]]
    assert collapse(det_free(M)) == det_free([[collapse(x) for x in row]
                                              for row in M])


def test_det_fraction_golden_and_singular():
    M = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert det_fraction(M) == -2
    assert det_fraction([[Fraction(1), Fraction(2)],
                         [Fraction(2), Fraction(4)]]) == 0


def test_det_int_matches_det_fraction():
    M = [[3, -2, 1], [0, 4, 5], [7, 1, -1]]
    assert det_int(M) == det_fraction([[Fraction(x) for x in r] for r in M])


def test_indexed_matrix_and_minor():
    M = IndexedMatrix(-1, [[1, 0], [2, 3], [4, 5]])
    assert M.lo == -1 and M.hi == 1 and M.width == 2
    assert minor(M, [-1, 0]) == 3
    assert minor(M, [0, -1]) == -3
    assert minor(M, [1, 1]) == 0       # repeated row
    with pytest.raises(ValueError):
        minor(M, [0])


def test_indexed_matrix_rejects_ragged_rows():
    with pytest.raises(ValueError):
        IndexedMatrix(0, [[1, 2], [3]])


@given(hpolys(), hpolys())
def test_fingerprint_separates_and_respects_equality(p, q):
    assert fingerprint(p) == fingerprint(p)
    if p == q:
        assert fingerprint(p) == fingerprint(q)
    fp = fingerprint(p)
    assert len(fp) == 3 and isinstance(fp[2], str) and len(fp[2]) == 16


def test_as_hpoly_coerces_ints():
    assert as_hpoly(5) == HPoly.const(5)
    p = HPoly.gen(1, 0)
    assert as_hpoly(p) is p
