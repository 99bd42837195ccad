"""
Tests for certificates, TSV rows and graph export.
"""
import numpy as np
import pytest

from app.catalog import classify_xx
from app.certificates import (adjacency_from_json, build_certificate, entry_row, export, to_adjacency_json,
                              to_dot, tsv, vertex_label)
from app.dsrg_verify import adjacency_matrix
from app.errors import InvalidSpec, NotDsrg
from app.models import DihedrantSpec


class TestCertificates:

    def test_smallest_dihedrant(self):
        certificate = build_certificate(DihedrantSpec(3, (1,), (1,)))
        assert certificate.params.as_tuple() == (6, 2, 1, 0, 1)
        assert certificate.votes.matrix and certificate.votes.group_ring and certificate.votes.spectral
        assert certificate.eigen.d == 1
        assert certificate.classification.case == 'a'

        data = certificate.to_dict()
        assert list(data) == ['n', 'X', 'Y', 'params', 'genuine', 'eigen', 'verifier_votes',
                              'classification']
        assert data['params'] == {'N': 6, 'k': 2, 'mu': 1, 'lambda': 0, 't': 1}
        assert data['eigen']['m_rho'] == 3

    def test_doubled_coset_case(self):
        certificate = build_certificate(DihedrantSpec(4, (1, 2), (1, 2)))
        assert certificate.classification.case == 'b'
        assert certificate.classification.T == (1, 2)

    def test_general_y_has_no_classification(self):
        certificate = build_certificate(DihedrantSpec(3, (1,), (0, 1)))
        assert certificate.params.as_tuple() == (6, 3, 2, 1, 2)
        assert certificate.classification is None
        assert 'classification' not in certificate.to_dict()

    def test_non_genuine(self):
        certificate = build_certificate(DihedrantSpec(3, (1, 2), (0, 1, 2)))
        assert not certificate.params.genuine
        assert certificate.classification is None

    def test_rejected(self):
        with pytest.raises(NotDsrg) as info:
            build_certificate(DihedrantSpec(4, (1,), ()))
        assert info.value.witness == (0, 3)


class TestRows:

    def test_entry_row(self):
        entry = classify_xx(6)[0]
        assert entry_row(entry) == ('a', 6, 3, '1', '1,4', 12, 4, 2, 0, 2)

    def test_tsv(self):
        assert tsv([(1, '-', 3), ('a', 'b', 'c')]) == '1\t-\t3\na\tb\tc'
        assert tsv([]) == ''


class TestExport:
    """DOT and JSON adjacency lists."""

    def test_vertex_labels(self):
        assert vertex_label(3, 0) == 'x^0'
        assert vertex_label(3, 4) == 'x^1.t'

    def test_dot(self):
        dot = to_dot(DihedrantSpec(3, (1,), (1,)))
        lines = dot.splitlines()
        assert lines[0] == 'digraph "Dih(3,1,1)" {'
        assert lines[-1] == '}'
        assert sum('[label=' in line for line in lines) == 6
        assert sum('->' in line for line in lines) == 12
        assert '    0 -> 4;' in lines

    def test_dot_with_empty_x(self):
        dot = to_dot(DihedrantSpec(4, (), (0,)))
        assert dot.splitlines()[0] == 'digraph "Dih(4,-,0)" {'

    def test_json(self):
        spec = DihedrantSpec(3, (1,), (1,))
        document = to_adjacency_json(spec)
        assert document['adjacency'][0] == [1, 4]
        assert document['vertices'][3] == 'x^0.t'
        assert len(document['adjacency']) == 6

    def test_json_rebuilds_matrix(self, known_instances):
        for spec, _ in known_instances:
            rebuilt = adjacency_from_json(to_adjacency_json(spec))
            assert np.array_equal(rebuilt, adjacency_matrix(spec))

    def test_unknown_format(self):
        with pytest.raises(InvalidSpec):
            export(DihedrantSpec(3, (1,), (1,)), 'png')
