"""
Tests for the adjacency oracle, the group-ring and character criteria and the parameter engine.
"""
from fractions import Fraction

import numpy as np
import pytest

from app.catalog import brute_force_xy
from app.dsrg_verify import (adjacency_matrix, complement_matrix, complement_params, eigen_data,
                             eigenvalues_match, feasible_params, quadratic_identity_check,
                             verify_group_ring, verify_matrix, verify_matrix_array, verify_spectral)
from app.errors import InvalidSpec, NotDsrg
from app.models import DihedrantSpec, DsrgParams


class TestAdjacency:
    """Vertex layout x^i -> i, x^i.tau -> n + i."""

    def test_small_dihedrant(self):
        A = adjacency_matrix(DihedrantSpec(3, (1,), (1,)))
        assert A.shape == (6, 6)
        assert list(np.flatnonzero(A[0])) == [1, 4]
        assert list(np.flatnonzero(A[3])) == [2, 5]
        assert A.sum() == 12

    def test_reflections_are_involutions(self):
        A = adjacency_matrix(DihedrantSpec(5, (), (0, 2)))
        assert (A == A.T).all()

    def test_no_loops(self, known_instances):
        for spec, _ in known_instances:
            assert not np.diag(adjacency_matrix(spec)).any()

    def test_complement(self):
        A = adjacency_matrix(DihedrantSpec(3, (1,), (1,)))
        C = complement_matrix(A)
        assert (A + C + np.eye(6, dtype=int) == 1).all()


class TestMatrixOracle:

    def test_known_instances(self, known_instances):
        for spec, expected in known_instances:
            assert verify_matrix(spec).as_tuple() == expected

    def test_directed_cycles_rejected(self):
        with pytest.raises(NotDsrg) as info:
            verify_matrix(DihedrantSpec(4, (1,), ()))
        assert info.value.witness == (0, 3)

    def test_empty_connection_set(self):
        with pytest.raises(InvalidSpec):
            verify_matrix(DihedrantSpec(4, (), ()))

    def test_undirected_srg_is_not_genuine(self):
        params = verify_matrix(DihedrantSpec(3, (1, 2), (0, 1, 2)))
        assert params.t == params.k
        assert not params.genuine

    def test_complement_of_known_instances(self, known_instances):
        for spec, _ in known_instances:
            params = verify_matrix(spec)
            complement = verify_matrix_array(complement_matrix(adjacency_matrix(spec)))
            assert complement == complement_params(params)

    def test_complement_params_examples(self):
        assert complement_params(DsrgParams(6, 2, 1, 0, 1)).as_tuple() == (6, 3, 2, 1, 2)
        assert complement_params(DsrgParams(8, 4, 3, 1, 3)).as_tuple() == (8, 3, 1, 1, 2)


class TestGroupRingCriterion:

    def test_known_instances(self, known_instances):
        for spec, expected in known_instances:
            assert verify_group_ring(spec).as_tuple() == expected

    def test_inverse_reflections(self):
        assert verify_group_ring(DihedrantSpec(3, (1,), (2,))).as_tuple() == (6, 2, 1, 0, 1)

    def test_reflection_identity_fails(self):
        with pytest.raises(NotDsrg) as info:
            verify_group_ring(DihedrantSpec(4, (1,), ()))
        assert info.value.details['identity'] == 'reflection'
        assert info.value.witness == 0

    def test_rotation_identity_fails(self):
        with pytest.raises(NotDsrg) as info:
            verify_group_ring(DihedrantSpec(5, (2,), ()))
        assert info.value.details['identity'] == 'rotation'
        assert info.value.witness == 4

    def test_agrees_with_oracle_on_all_pairs(self):
        for X, Y, params in brute_force_xy(3, threads=1):
            assert verify_group_ring(DihedrantSpec(3, X, Y)) == params


class TestSpectralCriterion:
    """The character test is diagnostic; it must accept what the oracle accepts."""

    def test_known_instances(self, known_instances):
        for spec, expected in known_instances:
            verdict = verify_spectral(spec, DsrgParams(*expected))
            assert verdict
            assert verdict.worst_deviation < 1e-6

    def test_general_y(self):
        for X, Y, params in brute_force_xy(3, threads=1):
            assert verify_spectral(DihedrantSpec(3, X, Y), params), (X, Y)

    def test_wrong_parameters(self):
        spec = DihedrantSpec(4, (1, 2), (1, 2))
        verdict = verify_spectral(spec, DsrgParams(8, 4, 2, 1, 3))
        assert not verdict

    def test_x_equals_y_needs_t_equal_mu(self):
        spec = DihedrantSpec(3, (1,), (1,))
        verdict = verify_spectral(spec, DsrgParams(6, 2, 1, 0, 2))
        assert not verdict
        assert verdict.worst_z == 0


class TestQuadraticIdentity:

    def test_doubled_punctured_group(self):
        result = quadratic_identity_check(5, [1, 2, 3, 4], -2)
        assert result
        assert result.alpha == 16

    def test_c52_connection_set(self):
        result = quadratic_identity_check(4, [1, 2], -2)
        assert result.holds
        assert result.alpha == 6

    def test_two_valued_unit_pairs(self):
        # U = {1,2,4,5} has spectrum 4, 0, -2, 0, -2, 0
        result = quadratic_identity_check(6, [1, 2], -2)
        assert result.holds
        assert result.alpha == 4

    def test_fractional_alpha(self):
        result = quadratic_identity_check(5, [1], -1)
        assert not result
        assert result.alpha == Fraction(6, 5)


class TestParameterEngine:

    def test_eigen_data(self):
        eigen = eigen_data(DsrgParams(6, 2, 1, 0, 1))
        assert (eigen.d, eigen.rho, eigen.sigma, eigen.m_rho, eigen.m_sigma) == (1, 0, -1, 3, 2)
        eigen = eigen_data(DsrgParams(8, 4, 3, 1, 3))
        assert (eigen.d, eigen.rho, eigen.sigma, eigen.m_rho, eigen.m_sigma) == (2, 0, -2, 5, 2)
        assert eigen.feasible

    def test_eigen_data_needs_positive_square(self):
        with pytest.raises(InvalidSpec):
            eigen_data(DsrgParams(6, 2, 1, 1, 1))
        with pytest.raises(InvalidSpec):
            eigen_data(DsrgParams(10, 4, 2, 1, 3))

    def test_feasible_small(self):
        found = {p.as_tuple() for p in feasible_params(6)}
        assert (6, 2, 1, 0, 1) in found
        assert (6, 3, 2, 1, 2) in found

    def test_feasible_entries_are_consistent(self):
        for N in range(4, 15):
            for params in feasible_params(N):
                assert params.genuine
                assert params.satisfies_counting_identity()
                assert eigen_data(params).feasible

    def test_known_instances_are_feasible(self, known_instances):
        for _, expected in known_instances:
            assert DsrgParams(*expected) in feasible_params(expected[0])

    def test_feasible_rejects_tiny(self):
        with pytest.raises(InvalidSpec):
            feasible_params(1)

    def test_numeric_eigenvalues(self, known_instances):
        for spec, expected in known_instances:
            assert eigenvalues_match(adjacency_matrix(spec), DsrgParams(*expected))

    def test_numeric_eigenvalues_mismatch(self):
        A = adjacency_matrix(DihedrantSpec(3, (1,), (1,)))
        assert not eigenvalues_match(A, DsrgParams(6, 3, 2, 1, 2))
