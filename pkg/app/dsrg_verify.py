"""
DSRG verifiers for dihedrants and the parameter engine.

Three independent checks are provided: the adjacency-matrix oracle, the exact
group-ring criterion and the (diagnostic) character criterion. Parameters are
always reported with N as the vertex count and n as the order of C_n.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from app.errors import InvalidSpec, NotDsrg
from app.group_ring import CyclicRingElem, cyc_mul, involution_inv, square_connection, u_of
from app.models import DsrgParams, EigenData
from app.spectrum import fourier
from config import Config

logger = logging.getLogger(__name__)


# ==================== Adjacency oracle ====================

def adjacency_matrix(spec):
    """
    0/1 matrix of Dih(n, X, Y) with x^i -> i and x^i.tau -> n + i.
    Entry (g, h) is 1 iff g^-1 h lies in X u Y.tau.
    """
    n = spec.n
    x_ind = np.zeros(n, dtype=np.int64)
    y_ind = np.zeros(n, dtype=np.int64)
    x_ind[list(spec.X)] = 1
    y_ind[list(spec.Y)] = 1

    idx = np.arange(n)
    # diff[a, b] = b - a mod n; reflections reverse the difference
    diff = (idx[None, :] - idx[:, None]) % n
    A = np.zeros((2 * n, 2 * n), dtype=np.int64)
    A[:n, :n] = x_ind[diff]
    A[:n, n:] = y_ind[diff]
    A[n:, :n] = y_ind[diff.T]
    A[n:, n:] = x_ind[diff.T]
    return A


def complement_matrix(A):
    """J - I - A."""
    size = A.shape[0]
    return np.ones_like(A) - np.eye(size, dtype=A.dtype) - A


def verify_matrix_array(A):
    """
    Check A^2 = tI + lambda A + mu (J - I - A) and AJ = JA = kJ for an arbitrary 0/1 matrix.

    t comes from the diagonal, lambda from the first arc and mu from the first
    non-arc in row-major order; constancy is then asserted everywhere.
    """
    size = A.shape[0]
    rows = A.sum(axis=1)
    cols = A.sum(axis=0)
    k = int(rows[0])
    if k < 1:
        raise InvalidSpec('the graph has no arcs')
    for g in range(size):
        if rows[g] != k or cols[g] != k:
            raise NotDsrg(f'vertex {g} breaks k-regularity', witness=(g, g))

    A2 = A @ A
    t = int(A2[0, 0])
    for g in range(size):
        if A2[g, g] != t:
            raise NotDsrg(f'diagonal of A^2 is not constant at vertex {g}', witness=(g, g))

    arcs = A.astype(bool)
    non_arcs = ~arcs
    np.fill_diagonal(non_arcs, False)
    first_arc = np.argwhere(arcs)[0]
    dsrg_lambda = int(A2[tuple(first_arc)])
    others = np.argwhere(non_arcs)
    dsrg_mu = int(A2[tuple(others[0])]) if len(others) else 0

    expected = np.where(arcs, dsrg_lambda, dsrg_mu)
    np.fill_diagonal(expected, t)
    bad = np.argwhere(A2 != expected)
    if len(bad):
        g, h = (int(i) for i in bad[0])
        kind = 'arc' if arcs[g, h] else 'non-arc'
        raise NotDsrg(f'{kind} ({g},{h}) has {int(A2[g, h])} two-paths, expected {int(expected[g, h])}',
                      witness=(g, h))
    return DsrgParams(size, k, dsrg_mu, dsrg_lambda, t)


def verify_matrix(spec):
    if spec.k < 1:
        raise InvalidSpec('k = |X| + |Y| must be at least 1')
    return verify_matrix_array(adjacency_matrix(spec))


# ==================== Group-ring criterion ====================

def _connection_vertices(spec):
    """Vertex indices of the connection set in ascending order."""
    return list(spec.X) + [spec.n + y for y in spec.Y]


def _coefficient(square, n, vertex):
    return square.p.coeffs[vertex] if vertex < n else square.q.coeffs[vertex - n]


def verify_group_ring(spec):
    """
    Ȳ Ū_X = (λ-μ)Ȳ + μC̄_n and X̄² + Ȳ Ȳ^(-1) = (t-μ)e + (λ-μ)X̄ + μC̄_n,
    with (μ, λ, t) read off S̄² at the same positions the matrix oracle uses.
    """
    n = spec.n
    if spec.k < 1:
        raise InvalidSpec('k = |X| + |Y| must be at least 1')

    square = square_connection(spec)
    members = _connection_vertices(spec)
    member_set = set(members)
    t = square.p.coeffs[0]
    dsrg_lambda = _coefficient(square, n, members[0])
    outsiders = [v for v in range(1, 2 * n) if v not in member_set]
    dsrg_mu = _coefficient(square, n, outsiders[0]) if outsiders else 0

    xbar = CyclicRingElem.from_exponents(n, spec.X)
    ybar = CyclicRingElem.from_exponents(n, spec.Y)
    whole = CyclicRingElem.whole_group(n)
    e = CyclicRingElem.identity(n)
    c = dsrg_lambda - dsrg_mu

    reflection_lhs = cyc_mul(ybar, u_of(n, spec.X))
    reflection_rhs = ybar.scale(c) + whole.scale(dsrg_mu)
    index = reflection_lhs.first_difference(reflection_rhs)
    if index is not None:
        raise NotDsrg(f'reflection identity fails at coefficient x^{index}',
                      witness=index, identity='reflection')

    rotation_lhs = cyc_mul(xbar, xbar) + cyc_mul(ybar, involution_inv(ybar))
    rotation_rhs = e.scale(t - dsrg_mu) + xbar.scale(c) + whole.scale(dsrg_mu)
    index = rotation_lhs.first_difference(rotation_rhs)
    if index is not None:
        raise NotDsrg(f'rotation identity fails at coefficient x^{index}',
                      witness=index, identity='rotation')

    return DsrgParams(2 * n, spec.k, dsrg_mu, dsrg_lambda, t)


# ==================== Character criterion ====================

@dataclass(frozen=True)
class SpectralVerdict:
    ok: bool
    worst_deviation: float
    worst_z: int

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {'ok': self.ok, 'worst_deviation': self.worst_deviation, 'worst_z': self.worst_z}


def verify_spectral(spec, params, tolerance=None):
    """
    Pointwise character identities for the claimed parameters. Diagnostic only.

    Y = X: t = μ and r_E(r_E + conj r_E) = μnΔ_0 + (λ-μ)r_E.
    Otherwise: r_F(r_E + conj r_E) = μnΔ_0 + (λ-μ)r_F and
    r_E² + |r_F|² = (t-μ) + μnΔ_0 + (λ-μ)r_E.
    """
    n = spec.n
    tol = Config.spectral_tolerance(n) if tolerance is None else tolerance
    r_e = fourier(CyclicRingElem.from_exponents(n, spec.X)).values
    r_f = fourier(CyclicRingElem.from_exponents(n, spec.Y)).values
    mu, c = params.dsrg_mu, params.dsrg_lambda - params.dsrg_mu
    delta0 = np.zeros(n)
    delta0[0] = 1.0

    if spec.X == spec.Y:
        residual = np.abs(r_e * (r_e + np.conj(r_e)) - (mu * n * delta0 + c * r_e))
        if params.t != mu:
            worst = float(abs(params.t - mu))
            return SpectralVerdict(False, max(worst, float(residual.max())), 0)
    else:
        first = np.abs(r_f * (r_e + np.conj(r_e)) - (mu * n * delta0 + c * r_f))
        second = np.abs(r_e ** 2 + np.abs(r_f) ** 2 - ((params.t - mu) + mu * n * delta0 + c * r_e))
        residual = np.maximum(first, second)

    worst_z = int(np.argmax(residual))
    worst = float(residual[worst_z])
    return SpectralVerdict(worst <= tol, worst, worst_z)


# ==================== Two-valued spectrum, exactly ====================

@dataclass(frozen=True)
class QuadraticIdentity:
    holds: bool
    alpha: object

    def __bool__(self):
        return self.holds


def quadratic_identity_check(n, X, c):
    """Ū_X² - cŪ_X = αC̄_n with α = |U|(|U| - c)/n, in the integer group ring."""
    u = u_of(n, X)
    size = u.augmentation
    scaled = size * (size - c)
    if scaled % n:
        return QuadraticIdentity(False, Fraction(scaled, n))
    alpha = scaled // n
    lhs = cyc_mul(u, u) - u.scale(c)
    return QuadraticIdentity(lhs == CyclicRingElem.whole_group(n).scale(alpha), alpha)


# ==================== Parameter engine ====================

def eigen_data(params):
    """Eigenvalues ρ, σ and multiplicities of a DSRG adjacency matrix."""
    N, k = params.N, params.k
    diff = params.dsrg_mu - params.dsrg_lambda
    d_squared = diff ** 2 + 4 * (params.t - params.dsrg_mu)
    d = isqrt(d_squared) if d_squared >= 0 else -1
    if d <= 0 or d * d != d_squared:
        raise InvalidSpec(f'd^2 = {d_squared} is not a positive perfect square for {params}')

    rho = Fraction(-diff + d, 2)
    sigma = Fraction(-diff - d, 2)
    m_rho = -(k + sigma * (N - 1)) / (rho - sigma)
    m_sigma = (k + rho * (N - 1)) / (rho - sigma)
    return EigenData(d, rho, sigma, m_rho, m_sigma)


def complement_params(params):
    """Parameters of J - I - A."""
    N, k = params.N, params.k
    shift = N - 2 * k
    return DsrgParams(
        N=N,
        k=shift + (k - 1),
        dsrg_mu=shift + params.dsrg_lambda,
        dsrg_lambda=shift + (params.dsrg_mu - 2),
        t=shift + (params.t - 1),
    )


def _admissible(N, k, dsrg_mu, dsrg_lambda, t):
    if not (0 <= dsrg_lambda < t and 0 < dsrg_mu <= t):
        return False
    if not -2 * (k - t - 1) <= dsrg_mu - dsrg_lambda <= 2 * (k - t):
        return False
    params = DsrgParams(N, k, dsrg_mu, dsrg_lambda, t)
    if not params.satisfies_counting_identity():
        return False
    try:
        return eigen_data(params).feasible
    except InvalidSpec:
        return False


def feasible_params(N):
    """Every genuine parameter tuple on N vertices passing the counting and eigenvalue conditions."""
    if N < 2:
        raise InvalidSpec(f'N must be at least 2, got {N}')
    found = []
    for k in range(2, N):
        for t in range(1, k):
            for dsrg_lambda in range(0, t):
                if k == N - 1:
                    # the counting identity leaves mu free
                    candidates = range(1, t + 1)
                else:
                    numerator = t - k * k + k * dsrg_lambda
                    denominator = k - N + 1
                    if numerator % denominator:
                        continue
                    candidates = [numerator // denominator]
                for dsrg_mu in candidates:
                    if _admissible(N, k, dsrg_mu, dsrg_lambda, t):
                        found.append(DsrgParams(N, k, dsrg_mu, dsrg_lambda, t))
    logger.debug('N=%d: %d feasible parameter sets', N, len(found))
    return found


def numeric_eigenvalues(A):
    return np.linalg.eigvals(A.astype(float))


def eigenvalues_match(A, params, tolerance=1e-6):
    """Numerical spectrum of A equals {k, ρ^m_ρ, σ^m_σ}."""
    eigen = eigen_data(params)
    if not eigen.feasible:
        return False
    expected = sorted([float(params.k)] + [float(eigen.rho)] * int(eigen.m_rho)
                      + [float(eigen.sigma)] * int(eigen.m_sigma))
    values = numeric_eigenvalues(A)
    if np.max(np.abs(values.imag)) > tolerance:
        return False
    return bool(np.allclose(sorted(values.real), expected, atol=tolerance, rtol=0))
