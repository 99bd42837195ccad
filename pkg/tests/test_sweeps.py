"""
Exhaustive desk-scale sweeps tying the classifier, the constructions and the
verifiers together. The full ranges are marked slow; run them with -m slow.
"""
import logging
from math import gcd

import pytest

from app.catalog import (agreement_sweep, brute_force_xx, classify_xx, enumerate_construction,
                         odd_order_closure, structure_report, twist_variant)
from app.dsrg_verify import (adjacency_matrix, complement_matrix, complement_params, eigenvalues_match,
                             feasible_params, quadratic_identity_check, verify_matrix,
                             verify_matrix_array)
from app.errors import NotDsrg, VerifierDisagreement
from app.group_ring import u_of
from app.models import DihedrantSpec
from app.residue_multiset import ResidueMultiset
from app.spectrum import coset_structure_mod_c

QUICK = range(3, 10)
FULL = range(10, 15)


def sweep_range(quick, full):
    return [pytest.param(n) for n in quick] + [pytest.param(n, marks=pytest.mark.slow) for n in full]


class TestVerifierAgreement:
    """Matrix oracle and group-ring criterion on every Dih(n, X, X)."""

    @pytest.mark.parametrize('n', sweep_range(QUICK, FULL))
    def test_no_disagreements(self, n):
        summary = agreement_sweep(n, threads=1, strict=True)
        assert summary.subsets == 2 ** (n - 1) - 1
        assert summary.disagreements == ()
        assert summary.spectral_failures == ()

    def test_parallel_sweep_is_identical(self):
        assert agreement_sweep(10, threads=1) == agreement_sweep(10, threads=4)


class TestClassificationCompleteness:

    @pytest.mark.parametrize('n', sweep_range(range(3, 9), range(9, 15)))
    def test_classifier_equals_brute_force(self, n):
        classified = sorted((e.X, e.params) for e in classify_xx(n))
        assert classified == brute_force_xx(n, threads=1)

    @pytest.mark.parametrize('n', [10, pytest.param(12, marks=pytest.mark.slow)])
    def test_brute_force_is_schedule_independent(self, n):
        assert brute_force_xx(n, threads=1) == brute_force_xx(n, threads=4)


class TestConstructionSoundness:
    """Every construction output verifies with exactly its formula parameters."""

    @pytest.mark.parametrize('n', sweep_range(range(3, 17), range(17, 25)))
    def test_enumerated_entries(self, n):
        for which in ('c51', 'c52'):
            for entry in enumerate_construction(n, which):
                spec = DihedrantSpec(n, entry.X, entry.X)
                assert verify_matrix(spec) == entry.params


class TestStructureOfAcceptedDihedrants:
    """t = mu, (mu - lambda) | n, the quadratic identity and the coset structure."""

    @pytest.mark.parametrize('n', sweep_range(range(3, 11), range(11, 15)))
    def test_structure(self, n):
        for X, params in brute_force_xx(n, threads=1):
            assert params.t == params.dsrg_mu
            c = params.dsrg_mu - params.dsrg_lambda
            assert c > 0 and n % c == 0

            identity = quadratic_identity_check(n, X, -c)
            assert identity

            U = ResidueMultiset(n, u_of(n, X).coeffs)
            report = coset_structure_mod_c(U, c)
            assert report.passed

            entry = structure_report(n, X, params)
            assert entry.X == X

    @pytest.mark.parametrize('n', sweep_range(range(3, 11), range(11, 15)))
    def test_parameters_are_feasible(self, n):
        feasible = set(feasible_params(2 * n))
        for _, params in brute_force_xx(n, threads=1):
            assert params in feasible


class TestComplements:

    @pytest.mark.parametrize('n', range(3, 11))
    def test_complement_digraph_verifies(self, n):
        for X, params in brute_force_xx(n, threads=1):
            A = adjacency_matrix(DihedrantSpec(n, X, X))
            assert verify_matrix_array(complement_matrix(A)) == complement_params(params)
            assert complement_params(complement_params(params)) == params


class TestOddOrderClosure:

    @pytest.mark.parametrize('n', [3, 5, pytest.param(7, marks=pytest.mark.slow)])
    def test_closure(self, n):
        report = odd_order_closure(n, threads=1)
        assert report['oracle_only'] == []
        assert report['theorem_only'] == []


class TestTwistVariants:
    """Unit multiples and reflection shifts of classified graphs keep their parameters."""

    @pytest.mark.parametrize('n', range(3, 10))
    def test_parameters_survive(self, n):
        for entry in classify_xx(n):
            spec = DihedrantSpec(n, entry.X, entry.X)
            for unit in (u for u in range(1, n) if gcd(u, n) == 1):
                for shift in range(n):
                    assert verify_matrix(twist_variant(spec, unit, shift)) == entry.params


class TestEigenvalues:
    """Numerical spectrum of every classified dihedrant against the parameter formulas."""

    @pytest.mark.parametrize('n', sweep_range(range(3, 8), range(8, 11)))
    def test_classified_spectra(self, n):
        for entry in classify_xx(n):
            A = adjacency_matrix(DihedrantSpec(n, entry.X, entry.X))
            assert eigenvalues_match(A, entry.params), entry.to_dict()


class TestDisagreementReporting:

    @staticmethod
    def reject_everything(spec):
        raise NotDsrg('rejected', witness=0)

    def test_disagreements_are_collected(self, monkeypatch, caplog):
        monkeypatch.setattr('app.catalog.verify_group_ring', self.reject_everything)
        with caplog.at_level(logging.WARNING, logger='app.catalog'):
            summary = agreement_sweep(3, threads=1)
        assert (1,) in summary.disagreements
        assert (2,) in summary.disagreements
        assert summary.accepted == ()
        assert 'disagree' in caplog.text

    def test_strict_sweep_raises(self, monkeypatch):
        monkeypatch.setattr('app.catalog.verify_group_ring', self.reject_everything)
        with pytest.raises(VerifierDisagreement) as info:
            agreement_sweep(3, threads=1, strict=True)
        assert info.value.details['X'] == [1]
        assert info.value.status == 500
