"""Determinant identity verifiers, counterexample regressions, and the
seeded instance generators."""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurdet import (HPoly, IdentityReport, IndexedMatrix, SkewShape,
                      SuiteConfig, THEOREM_IDS, bazin_check, check_lemma511,
                      collapse, converse_collapse, hg_formula, lp_formula,
                      run_instance, run_suite, schur9, skew_from_cells,
                      verify_LP, verify_K, verify_converse, verify_cor44,
                      verify_cor45, verify_cor46, verify_cor57,
                      verify_gen_HG, verify_giambelli, verify_lemma510,
                      verify_main, verify_mpp)
from schurdet.identities import (chi, inv_pairs, inv_perm, random_instance,
                                 value_fingerprint)
from schurdet.strips import lascoux_pragacz, outer_strip

from conftest import partitions


def test_bookkeeping_helpers():
    assert chi(True) == 1 and chi(False) == 0
    assert inv_pairs([3, 1], [2, 0]) == 3
    assert inv_perm([2, 0, 1]) == 2
    fp = value_fingerprint([Fraction(1, 2), Fraction(-3)])
    assert fp[0] == 2 and fp[1] == (1 + 2) + (3 + 1)


def test_report_shape_and_serialization():
    rep = verify_cor44((3, 1), (1,))
    assert rep.ok and rep.verdict == "Pass"
    d = rep.to_dict()
    assert set(d) == {"theorem-id", "instance", "k", "lhs-fingerprint",
                      "rhs-fingerprint", "verdict", "elapsed"}
    assert d["lhs-fingerprint"] == d["rhs-fingerprint"]
    assert json.loads(rep.to_json()) == d


def test_trivial_pass_when_nothing_to_swap():
    r1, r2 = verify_main((2, 1), (2, 1), (1,), 3)
    assert r1.verdict == r2.verdict == "TrivialPass"
    assert r1.ok and r1.k == 0


def test_bazin_small_and_trivial():
    M = IndexedMatrix(0, [[2, 1], [5, 3], [1, 4], [0, 2]])
    rep = bazin_check(M, [0], [1], [2])
    assert rep.ok and rep.k == 1
    rep = bazin_check(M, [0, 1], [2, 3], [])
    assert rep.ok and rep.k == 2


def test_bazin_row_order_insensitive_verdict():
    M = IndexedMatrix(0, [[2, 1, 7], [5, 3, -1], [1, 4, 0], [0, 2, 2], [3, 3, 3]])
    a, b, c = [0, 1], [3, 4], [2]
    assert bazin_check(M, a, b, c).ok
    assert bazin_check(M, a[::-1], b, c).ok
    assert bazin_check(M, a, b[::-1], c).ok


def test_bazin_input_validation():
    M = IndexedMatrix(0, [[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ValueError):
        bazin_check(M, [], [], [0, 1])
    with pytest.raises(ValueError):
        bazin_check(M, [0], [1], [])


@given(partitions(max_rows=3, max_cols=3), partitions(max_rows=3, max_cols=3),
       partitions(max_rows=3, max_cols=3))
@settings(max_examples=60, deadline=None)
def test_row_swap_identities_hold(lam, mu, nu):
    for rep in verify_main(lam, mu, nu, 3):
        assert rep.ok


def test_decomposition_identities_on_the_running_example():
    lam, mu, nu = (6, 6, 6, 3, 3), (4, 3, 2), (7, 6, 6, 5, 3, 2)
    for rep in verify_LP(lam, mu, nu, 6):
        assert rep.verdict == "Pass"
    for rep in verify_K(lam, mu, nu, 6):
        assert rep.verdict == "Pass"
    eqs = [r.instance["eq"] for r in verify_LP(lam, mu, nu, 6)]
    assert eqs == ["main_LP1", "main_LP2"]
    eqs = [r.instance["eq"] for r in verify_K(lam, mu, nu, 6)]
    assert eqs == ["main_K1", "main_K2"]


def test_straight_shape_corollaries():
    assert verify_cor45((6, 6, 6, 3, 3), (4, 3, 2)).verdict == "Pass"
    assert verify_cor46((5, 4, 2), (2, 1)).verdict == "Pass"
    assert verify_cor44((5, 4, 2), (2, 1)).verdict == "Pass"


def test_strip_formula_matches_the_shape():
    lam, mu = (6, 6, 6, 3, 3), (4, 3, 2)
    assert lp_formula(lam, mu) == schur9(SkewShape(lam, mu))
    assert hg_formula(lam, mu, outer_strip(lam)) == lp_formula(lam, mu)
    assert lp_formula((3, 1), (3, 1)) == HPoly.one()


def test_known_counterexample_separates_the_two_forms():
    corrected = verify_mpp((2, 1), (1,), 2, (0, 0, 0, 0))
    original = verify_mpp((2, 1), (1,), 2, (0, 0, 0, 0), corrected=False)
    assert corrected.verdict == "Pass"
    assert original.verdict == "Fail"
    assert corrected.lhs_fingerprint == corrected.rhs_fingerprint
    assert original.lhs_fingerprint != original.rhs_fingerprint


def test_uncorrected_form_fails_on_a_random_draw_too():
    rng = random.Random(4)
    inst = random_instance("cor4.7", rng)
    inst["corrected"] = False
    assert run_instance("cor4.7", inst)[0].verdict == "Fail"


def test_generalized_product_identity_example():
    rep = verify_gen_HG((8, 8, 8, 6, 6, 5, 4), (8, 8, 6, 6, 6, 3, 3), (4, 3))
    assert rep.verdict == "Pass"
    assert rep.instance["r"] == [3, 2]


def test_generalized_product_identity_rejects_incompatible_input():
    with pytest.raises(ValueError):
        verify_gen_HG((5, 5, 5, 4), (5, 5, 4, 4), (4, 1))


def test_hook_determinant_identities():
    assert verify_giambelli([4, 2, 1], [3, 1, 0], [], []).verdict == "Pass"
    assert verify_giambelli([4, 2], [3, 1], [1], [0]).verdict == "Pass"
    with pytest.raises(ValueError):
        verify_giambelli([2, 3], [1, 0], [], [])


def test_product_to_sum_rule():
    rep = verify_lemma510(((2, 1), ()), ((4,), (2,)))
    assert rep.verdict == "Pass"


def test_entrywise_bridge_identity():
    assert check_lemma511((8, 8, 8, 6, 6, 5, 4), (8, 8, 6, 6, 6, 3, 3), (4, 3))
    assert check_lemma511((6, 6, 6, 3, 3), (6, 6, 6, 3, 3), (4, 3, 2))


# --- converse construction -------------------------------------------------

ALPHA = skew_from_cells(set(outer_strip((6, 6, 6, 3, 3)).cells))


def test_converse_on_a_decomposition_recovers_the_shape():
    lam, mu = (6, 6, 6, 3, 3), (4, 3, 2)
    dec = lascoux_pragacz(SkewShape(lam, mu))
    rep = verify_converse(ALPHA, sorted(dec.p), sorted(dec.q))
    assert rep.verdict == "Pass"
    assert rep.instance["sign"] == 1
    assert rep.instance["rho"] == {"outer": [6, 6, 6, 3, 3], "inner": [4, 3, 2]}


def test_converse_single_window_and_zero_cases():
    assert verify_converse(ALPHA, [0], [3]).verdict == "Pass"
    assert verify_converse(ALPHA, [2, 2], [3, 5]).verdict == "Zero"
    assert verify_converse(ALPHA, [3, 4], [-2, -1]).verdict == "Zero"


def test_converse_endpoint_order_flips_sign_not_verdict():
    lam, mu = (6, 6, 6, 3, 3), (4, 3, 2)
    dec = lascoux_pragacz(SkewShape(lam, mu))
    a, b = sorted(dec.p), sorted(dec.q)
    base = verify_converse(ALPHA, a, b)
    swapped_a = verify_converse(ALPHA, [a[1], a[0], a[2]], b)
    swapped_b = verify_converse(ALPHA, a, [b[0], b[2], b[1]])
    assert base.verdict == swapped_a.verdict == swapped_b.verdict == "Pass"
    assert swapped_a.instance["sign"] == -base.instance["sign"]
    assert swapped_b.instance["sign"] == -base.instance["sign"]
    assert swapped_a.instance["rho"] == base.instance["rho"]


def test_converse_mixed_sign_regression():
    # this slice determinant expands with both signs present, so no
    # single signed shape can match it; the verifier must say so
    alpha = SkewShape((3, 2, 1, 1))
    a, b = [-3, -1, 1], [-2, 1, 2]
    rep = verify_converse(alpha, a, b)
    assert rep.verdict == "Fail"
    assert rep.instance["compat"] is False
    lhs, _ = converse_collapse(alpha, a, b)
    want = (collapse(schur9(SkewShape((3, 3, 2))))
            + collapse(schur9(SkewShape((3, 2, 2, 1))))
            - collapse(schur9(SkewShape((4, 4))))
            - collapse(schur9(SkewShape((4, 3, 1)))))
    assert lhs == want


def test_converse_large_incompatible_regression():
    rep = verify_converse(SkewShape((9, 9, 9, 8, 4, 3), (7, 5, 5, 3)),
                          [-5, -2, 1], [0, 2, 8])
    assert rep.verdict == "Fail"
    assert rep.instance["compat"] is False
    assert rep.instance["rho"] == {"outer": [8, 8, 8, 7, 4, 4, 3],
                                   "inner": [6, 4, 2, 2, 1]}


def test_converse_fingerprints_are_of_ring_elements():
    rep = verify_converse(ALPHA, [0], [3])
    lhs, rhs = converse_collapse(ALPHA, [0], [3])
    from schurdet import fingerprint
    assert rep.lhs_fingerprint == fingerprint(lhs)
    assert rep.rhs_fingerprint == fingerprint(rhs)


# --- generators and the suite runner ---------------------------------------

@pytest.mark.parametrize("tid", THEOREM_IDS)
def test_random_instances_verify(tid):
    rng = random.Random(20260823)
    for _ in range(2):
        inst = random_instance(tid, rng)
        json.dumps(inst)    # must be serializable as emitted
        for rep in run_instance(tid, inst):
            assert rep.ok, (tid, inst, rep.verdict)


def test_generated_converse_instances_hold_exactly():
    rng = random.Random(5)
    for _ in range(10):
        inst = random_instance("thm6.1", rng)
        lhs, rhs = converse_collapse(
            (inst["alpha"]["outer"], inst["alpha"]["inner"]),
            inst["a"], inst["b"])
        assert lhs == rhs


def test_run_instance_rejects_unknown_id():
    with pytest.raises(ValueError):
        run_instance("thm9.9", {})
    with pytest.raises(ValueError):
        random_instance("thm9.9", random.Random(0))


def test_suite_is_deterministic_for_a_seed():
    cfg = SuiteConfig(theorem_ids=("cor4.4", "cor5.9"), count=3, seed=12)
    a = [r.to_dict() for r in run_suite(cfg)]
    b = [r.to_dict() for r in run_suite(cfg)]
    for d in a + b:
        d["elapsed"] = 0.0
    assert a == b
    assert len(a) == 6
    assert all(d["verdict"] in ("Pass", "TrivialPass", "Zero") for d in a)


def test_suite_parallel_matches_serial():
    serial = SuiteConfig(theorem_ids=("cor4.4", "thm3.3"), count=3, seed=9,
                         threads=1)
    parallel = SuiteConfig(theorem_ids=("cor4.4", "thm3.3"), count=3, seed=9,
                           threads=3)
    a = [r.to_dict() for r in run_suite(serial)]
    b = [r.to_dict() for r in run_suite(parallel)]
    for d in a + b:
        d["elapsed"] = 0.0
    assert a == b
