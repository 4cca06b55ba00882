from fractions import Fraction

import pytest

from wpgap.bounds import (
    TPolicy, bound_set, branch2_inequality, c1_bound, c2_bound, c3_bound, caseA_bound, caseB_bound,
    exact_min_genus, genus_threshold, homma_ommori_lower_Wn, is_classical_regime, large_g_closed_form,
    omega, pflaum_N, pluricanonical_dimension, theorem_pipeline, verify_lemma, w1_polynomial,
)
from wpgap.errors import PreconditionViolated, ZeroDenominator
from wpgap.hyperelliptic import LemmaClass, in_lemma_class
from wpgap.semigroup import binomial, from_gaps


def test_bound_set_example():
    bounds = bound_set(16, 3, 1)
    assert (bounds.c1, bounds.c2, bounds.c3, bounds.c3_branch) == (63, 53, 66, "first")
    assert bounds.N_g_n == 60
    assert bounds.omega_n == 4080
    assert bounds.to_dict()["N"] == 60


def test_pflaum_N():
    assert bound_set(6, 0, 1).N_g_n == 25
    assert bound_set(10, 0, 2).N_g_n == 72
    assert pflaum_N(12, 1) == 44
    assert pflaum_N(3, 1) == 15
    assert pflaum_N(3, 2) == 16


def test_bound_set_preconditions():
    with pytest.raises(PreconditionViolated):
        bound_set(1, 0)
    with pytest.raises(PreconditionViolated):
        bound_set(5, 3)
    with pytest.raises(PreconditionViolated):
        bound_set(5, 0, 0)


def test_c1_minus_c2():
    for gamma in range(0, 20):
        for g in range(2 * gamma, 2 * gamma + 30):
            assert c1_bound(g, gamma) - c2_bound(g, gamma) == 2 * gamma * gamma - 4 * gamma + 4


def test_c3_branch_identity():
    for gamma in range(3, 11):
        boundary = 6 * gamma * gamma - gamma + 1
        assert caseA_bound(boundary, gamma) == caseB_bound(boundary, gamma)
        assert c3_bound(boundary, gamma) == (caseB_bound(boundary, gamma), "second")
        for g in range(boundary + 1, boundary + 50):
            assert caseB_bound(g, gamma) > caseA_bound(g, gamma)
            assert c3_bound(g, gamma)[1] == "second"
        for g in range(2 * gamma, boundary):
            assert c3_bound(g, gamma)[1] == "first"


def test_c3_first_argument_spellings_agree():
    for gamma in range(0, 51):
        assert (gamma - 1) * (2 * gamma + 1) == 2 * gamma * gamma - gamma - 1


def test_type2_derivation_identity():
    for gamma in range(0, 8):
        for g in range(2 * gamma, 60):
            left = (3 * g * g + g) // 2 - (g * g + g - gamma * gamma - gamma) \
                - (2 * gamma * g - gamma * gamma - 4 * gamma + 4)
            assert left == binomial(g - 2 * gamma, 2) + 4 * gamma - 4

# --- Point counts ---

@pytest.mark.parametrize("g, n, expected", [(3, 1, 24), (3, 2, 108), (2, 1, 6), (2, 2, 18), (5, 3, 2000)])
def test_omega(g, n, expected):
    assert omega(g, n) == expected


def test_omega_closed_forms():
    for g in range(2, 31):
        assert omega(g, 1) == g ** 3 - g
        for n in range(2, 5):
            assert omega(g, n) == (2 * n - 1) ** 2 * (g - 1) ** 2 * g
            assert omega(g, n) == (2 * g - 2) * (pluricanonical_dimension(g, n) + 1) \
                * (pluricanonical_dimension(g, n) + 2 * n) // 2


def test_pluricanonical_dimension():
    assert pluricanonical_dimension(3, 1) == 2
    assert pluricanonical_dimension(3, 2) == 5
    with pytest.raises(PreconditionViolated):
        pluricanonical_dimension(1, 1)


def test_classical_regime():
    assert is_classical_regime(3, 2, 0)
    assert is_classical_regime(3, 2, 11)
    assert not is_classical_regime(3, 2, 7)


@pytest.mark.parametrize("g, n, expected", [(3, 2, 18), (2, 2, 6), (5, 3, 134)])
def test_homma_ommori(g, n, expected):
    assert homma_ommori_lower_Wn(g, n) == expected


def test_homma_ommori_exceeds_N_for_n_at_least_2():
    for g in range(3, 11):
        for n in (2, 3):
            assert homma_ommori_lower_Wn(g, n) > pflaum_N(g, n)


def test_homma_ommori_precondition():
    with pytest.raises(PreconditionViolated):
        homma_ommori_lower_Wn(3, 1)

# --- Theorem pipeline ---

def test_pipeline_holds_at_16():
    report = theorem_pipeline(16, 3, TPolicy.PAPER)
    assert report.numerator == 2694
    assert report.c3 == 66
    assert report.W1_lower == 63
    assert report.N_g_1 == 60
    assert report.holds
    assert report.closed_form_value is None


def test_pipeline_fails_at_12():
    report = theorem_pipeline(12, 3, TPolicy.PAPER)
    assert report.numerator == 1254
    assert report.W1_lower == 42
    assert report.N_g_1 == 44
    assert not report.holds


@pytest.mark.parametrize("g, expected", [(13, False), (14, False), (15, True), (16, True)])
def test_pipeline_near_threshold(g, expected):
    assert theorem_pipeline(g, 3).holds is expected


def test_pipeline_smallest_legal_genus():
    for policy in TPolicy:
        report = theorem_pipeline(8, 3, policy)
        assert report.r == 6
        assert report.W1_lower >= report.r


def test_pipeline_at_c3_boundary():
    full_t = theorem_pipeline(52, 3, TPolicy.PAPER)
    sharp = theorem_pipeline(52, 3, TPolicy.MIN)
    assert full_t.c3 == 246
    assert (full_t.W1_lower, sharp.W1_lower) == (263, 266)
    assert sharp.t_used == 24
    assert full_t.exact_quotient == 263
    assert full_t.closed_form_value == 259 + Fraction(182, 41)
    assert full_t.to_dict()["closed_form_value"] == {"numerator": 10801, "denominator": 41}


def test_full_t_numerator_is_w1_polynomial():
    for gamma in range(3, 9):
        for g in range(2 * gamma + 2, 301):
            assert theorem_pipeline(g, gamma, TPolicy.PAPER).numerator == w1_polynomial(g, gamma)


def test_min_policy_never_weaker():
    for gamma in range(3, 9):
        for g in range(2 * gamma + 2, 200):
            full_t = theorem_pipeline(g, gamma, TPolicy.PAPER)
            sharp = theorem_pipeline(g, gamma, TPolicy.MIN)
            assert sharp.W1_lower >= full_t.W1_lower


def test_pipeline_preconditions():
    with pytest.raises(PreconditionViolated):
        theorem_pipeline(16, 2)
    with pytest.raises(PreconditionViolated):
        theorem_pipeline(7, 3)


@pytest.mark.parametrize("gamma, threshold", [(3, 16), (4, 24), (5, 32), (6, 41)])
def test_genus_threshold(gamma, threshold):
    assert genus_threshold(gamma) == threshold


def test_theorem_holds_from_threshold_on():
    for gamma in range(3, 7):
        for g in range(genus_threshold(gamma), 501):
            assert theorem_pipeline(g, gamma, TPolicy.MIN).holds, (g, gamma)


def test_exact_min_genus():
    assert exact_min_genus(3, 200) == 15
    assert exact_min_genus(3, 13) is None
    assert exact_min_genus(4, 200) <= 24
    with pytest.raises(PreconditionViolated):
        genus_threshold(2)


def test_branch2_inequality():
    assert branch2_inequality(16, 3) == 22 + Fraction(3198, 66)
    assert branch2_inequality(15, 3) == -18 + Fraction(3198, 61)
    assert branch2_inequality(15, 3) > 0
    with pytest.raises(ZeroDenominator):
        branch2_inequality(2, 3)


def test_large_g_closed_form():
    assert large_g_closed_form(52, 3) == 259 + Fraction(182, 41)
    assert large_g_closed_form(100, 3) == 499 + Fraction(182, 89)
    with pytest.raises(PreconditionViolated):
        large_g_closed_form(51, 3)

# --- Lemma verification ---

def test_verify_lemma_type2_at_12():
    verdict = verify_lemma(12, 3, LemmaClass.TYPE_II)
    assert verdict.bound == 23
    assert verdict.max_observed == 23
    assert verdict.holds


def test_verify_lemma_caseB_extremal():
    verdict = verify_lemma(18, 3, LemmaClass.CASE_B)
    assert verdict.bound == 42
    assert verdict.max_observed == 42
    assert verdict.witness == tuple(range(1, 13)) + tuple(range(20, 26))
    assert verdict.holds


def test_verify_lemma_type1_below_regime():
    verdict = verify_lemma(7, 3, LemmaClass.TYPE_I)
    assert verdict.bound == 18
    assert verdict.holds
    assert in_lemma_class(from_gaps((1, 2, 3, 4, 5, 7, 8)), 3, LemmaClass.TYPE_I)


def test_verify_lemma_empty_class_holds():
    verdict = verify_lemma(14, 3, LemmaClass.CASE_B)
    assert verdict.class_empty
    assert verdict.max_observed is None
    assert verdict.holds


@pytest.mark.parametrize("lemma_class", list(LemmaClass))
def test_verify_lemma_gamma_3(lemma_class):
    for g in range(12, 19):
        assert verify_lemma(g, 3, lemma_class).holds


@pytest.mark.parametrize("lemma_class", list(LemmaClass))
def test_verify_lemma_gamma_4(lemma_class):
    for g in range(16, 21):
        verdict = verify_lemma(g, 4, lemma_class)
        assert verdict.holds
        if lemma_class is LemmaClass.CASE_B:
            assert verdict.class_empty


def test_verify_lemma_ramified_bounds_are_attained():
    assert verify_lemma(20, 4, LemmaClass.TYPE_I).max_observed == c1_bound(20, 4) == 98
    assert verify_lemma(20, 4, LemmaClass.TYPE_II).max_observed == c2_bound(20, 4) == 78


def test_verify_lemma_caseB_class_sizes():
    assert verify_lemma(17, 3, LemmaClass.CASE_B).class_size == 1
    assert verify_lemma(18, 3, LemmaClass.CASE_B).class_size == 7


def test_verify_lemma_is_independent_of_jobs():
    assert verify_lemma(13, 3, LemmaClass.TYPE_I, jobs=2) == verify_lemma(13, 3, LemmaClass.TYPE_I, jobs=1)


def test_verify_lemma_precondition():
    with pytest.raises(PreconditionViolated):
        verify_lemma(5, 3, LemmaClass.ALL_TYPE3)
