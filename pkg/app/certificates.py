"""
Certificates, TSV rows and graph export (DOT and JSON adjacency lists).
"""
import logging

import numpy as np

from app.catalog import structure_report
from app.dsrg_verify import (adjacency_matrix, eigen_data, verify_group_ring, verify_matrix,
                             verify_spectral)
from app.errors import InvalidSpec, NotDsrg, VerifierDisagreement
from app.models import Certificate, VerifierVotes
from app.utils import format_residues

logger = logging.getLogger(__name__)

EXPORT_FORMATS = ('dot', 'json')


def build_certificate(spec):
    """Run all three verifiers; raises NotDsrg when the exact verifiers reject."""
    try:
        by_matrix = verify_matrix(spec)
    except NotDsrg as exc:
        by_matrix, matrix_error = None, exc
    try:
        by_ring = verify_group_ring(spec)
    except NotDsrg:
        by_ring = None

    if by_matrix != by_ring:
        logger.warning('Verifiers disagree on %s: matrix %s, group ring %s', spec.to_dict(), by_matrix, by_ring)
        raise VerifierDisagreement('matrix and group-ring verifiers disagree', spec=spec.to_dict())
    if by_matrix is None:
        raise matrix_error

    params = by_matrix
    spectral = verify_spectral(spec, params)
    classification = None
    if spec.X == spec.Y and params.genuine:
        classification = structure_report(spec.n, spec.X, params)
    try:
        eigen = eigen_data(params)
    except InvalidSpec:
        eigen = None
    return Certificate(spec, params, eigen, VerifierVotes(True, True, bool(spectral)), classification)


# ==================== Rows ====================

def entry_row(entry):
    p = entry.params
    return (entry.case, entry.n, entry.v, format_residues(entry.T), format_residues(entry.X),
            p.N, p.k, p.dsrg_mu, p.dsrg_lambda, p.t)


def params_row(params):
    return params.as_tuple()


def tsv(rows):
    return '\n'.join('\t'.join(str(cell) for cell in row) for row in rows)


# ==================== Graph export ====================

def vertex_label(n, index):
    return f'x^{index}' if index < n else f'x^{index - n}.t'


def adjacency_lists(A):
    return [[int(h) for h in np.flatnonzero(row)] for row in A]


def to_dot(spec):
    """Graphviz digraph with one edge per arc."""
    n = spec.n
    A = adjacency_matrix(spec)
    lines = [f'digraph "Dih({n},{format_residues(spec.X)},{format_residues(spec.Y)})" {{']
    for g in range(2 * n):
        lines.append(f'    {g} [label="{vertex_label(n, g)}"];')
    for g, targets in enumerate(adjacency_lists(A)):
        for h in targets:
            lines.append(f'    {g} -> {h};')
    lines.append('}')
    return '\n'.join(lines)


def to_adjacency_json(spec):
    A = adjacency_matrix(spec)
    return {
        'n': spec.n,
        'X': list(spec.X),
        'Y': list(spec.Y),
        'vertices': [vertex_label(spec.n, g) for g in range(2 * spec.n)],
        'adjacency': adjacency_lists(A),
    }


def adjacency_from_json(document):
    """Rebuild the 0/1 matrix from a JSON adjacency document."""
    lists = document['adjacency']
    A = np.zeros((len(lists), len(lists)), dtype=np.int64)
    for g, targets in enumerate(lists):
        A[g, targets] = 1
    return A


def export(spec, fmt):
    if fmt == 'dot':
        return to_dot(spec)
    if fmt == 'json':
        return to_adjacency_json(spec)
    raise InvalidSpec(f'unknown export format {fmt!r}; use one of {", ".join(EXPORT_FORMATS)}')
