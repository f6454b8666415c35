import random

import pytest

from csatools.karpenko import (
    auxiliary_inequalities,
    corestriction_certificate,
    karpenko_lower_bound,
    proof_inequalities,
)
from csatools.valuation import vp
from csatools.verify import karpenko_lower_bound_grouped


def minimum_by_definition(p, n, k):
    """Literal transcription of the minimum, kept separate from the library."""
    candidates = {k}
    for i in range(k):
        candidates.add(i + n - vp(p, k - i))
    return min(candidates)


class TestLowerBound:
    def test_single_term_case(self):
        assert karpenko_lower_bound(2, 1, 1) == 1

    def test_hand_evaluated_case(self):
        # i = 0,1,2 give 1, 3, 4; the codimension branch gives 3
        assert karpenko_lower_bound(3, 2, 3) == 1

    def test_derived_case(self):
        assert karpenko_lower_bound(3, 3, 20) == 3
        assert karpenko_lower_bound_grouped(3, 3, 20) == 3

    def test_matches_definition_on_a_grid(self):
        rng = random.Random(8)
        cases = [(p, n, k) for p in (2, 3, 5) for n in (1, 2, 4) for k in (1, 2, 3, 9, 50)]
        cases += [
            (rng.choice((2, 3, 5, 7)), rng.randrange(1, 6), rng.randrange(1, 600))
            for _ in range(50)
        ]
        for p, n, k in cases:
            want = minimum_by_definition(p, n, k)
            assert karpenko_lower_bound(p, n, k) == want
            assert karpenko_lower_bound_grouped(p, n, k) == want

    def test_never_exceeds_codimension(self):
        for p in (2, 3):
            for n in (1, 2, 3):
                for k in range(1, 120):
                    assert karpenko_lower_bound(p, n, k) <= k

    def test_budget_rejection(self):
        with pytest.raises(ValueError, match="budget"):
            karpenko_lower_bound(3, 3, 10**7 + 1)
        with pytest.raises(ValueError, match="budget"):
            karpenko_lower_bound(3, 3, 100, budget=50)
        assert karpenko_lower_bound(3, 3, 100, budget=100) == karpenko_lower_bound_grouped(
            3, 3, 100
        )

    def test_budget_env_var(self, monkeypatch):
        monkeypatch.setenv("CSATOOLS_ITERATION_BUDGET", "10")
        with pytest.raises(ValueError, match="budget"):
            karpenko_lower_bound(3, 3, 100)
        monkeypatch.setenv("CSATOOLS_ITERATION_BUDGET", "not-a-number")
        with pytest.raises(ValueError, match="CSATOOLS_ITERATION_BUDGET"):
            karpenko_lower_bound(3, 3, 100)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            karpenko_lower_bound(4, 1, 1)
        with pytest.raises(ValueError):
            karpenko_lower_bound(3, 0, 1)
        with pytest.raises(ValueError):
            karpenko_lower_bound(3, 1, 0)


class TestCertificate:
    def test_p3_r1(self):
        cert = corestriction_certificate(3, 1)
        assert cert.codim == 20
        assert cert.observed_valuation == 2
        assert cert.lower_bound == 3
        assert cert.violated

    def test_p5_r1(self):
        cert = corestriction_certificate(5, 1)
        assert cert.codim == 3114
        assert cert.observed_valuation == 4
        assert cert.violated

    def test_p3_r2(self):
        cert = corestriction_certificate(3, 2)
        assert cert.codim == 716
        assert cert.observed_valuation == 4
        assert cert.violated

    def test_uses_degree_exponent_r_times_p(self):
        # s = 1 is built in: the bound inside the certificate is the one at n = r*p
        cert = corestriction_certificate(3, 2)
        assert cert.lower_bound == karpenko_lower_bound(3, 6, cert.codim)

    def test_refuses_p2(self):
        with pytest.raises(ValueError, match="odd"):
            corestriction_certificate(2, 1)

    def test_budget_guard(self):
        with pytest.raises(ValueError, match="budget"):
            corestriction_certificate(7, 2)  # 7^14 is far beyond 10^7


class TestSymbolicRoute:
    def test_matches_loop_certificates(self):
        for p, r in [(3, 1), (3, 2), (3, 3), (5, 1)]:
            assert proof_inequalities(p, r) == corestriction_certificate(p, r).violated

    def test_reaches_loop_infeasible_ranges(self):
        for p, r in [(3, 6), (5, 4), (7, 2), (7, 5), (11, 2), (13, 1)]:
            assert proof_inequalities(p, r) is True

    def test_refuses_p2(self):
        with pytest.raises(ValueError, match="odd"):
            proof_inequalities(2, 1)


class TestAuxiliaryInequalities:
    def test_examples(self):
        assert auxiliary_inequalities(3, 1) == (True, True)
        assert auxiliary_inequalities(3, 4) == (True, True)
        failing = auxiliary_inequalities(2, 1)
        assert failing.pr_ge_r_plus_2 is False

    def test_hold_for_all_odd_primes_in_range(self):
        for p in (3, 5, 7, 11, 13):
            for r in range(1, 12):
                aux = auxiliary_inequalities(p, r)
                assert aux.pr_ge_r_plus_2 and aux.pr_ge_rp
