"""
Characters of C_n and the Fourier transform on Z_n.

Spectra are computed in double precision and snapped to integers within a
tolerance; everything that decides acceptance elsewhere is re-checked with
exact group-ring identities.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np
from sympy import factorint, mobius, totient

from app.errors import (ConclusionFailed, HypothesisFailed, NotOrbitConstant,
                        OutOfRange, SpectrumNotTwoValued)
from app.group_ring import CyclicRingElem
from app.residue_multiset import ResidueMultiset, ms_negate, orbit, subgroup
from app.utils import divisors, require_divisor
from config import Config

logger = logging.getLogger(__name__)


def snap(value, tolerance):
    """Integer nearest to a complex value, or None when it is not within tolerance."""
    nearest = round(value.real)
    if abs(value.imag) <= tolerance and abs(value.real - nearest) <= tolerance:
        return int(nearest)
    return None


def _clean(x, tolerance):
    return 0.0 if abs(x) <= tolerance else float(x)


@dataclass(eq=False)
class SpectrumTable:
    modulus: int
    values: np.ndarray
    tolerance: float

    def __getitem__(self, z):
        return complex(self.values[z % self.modulus])

    def __len__(self):
        return self.modulus

    def snapped(self):
        return [snap(complex(v), self.tolerance) for v in self.values]

    def is_integral(self):
        return all(s is not None for s in self.snapped())

    def rows(self):
        """(z, re, im, snapped) with near-zero parts cleaned for stable printing."""
        out = []
        for z, (value, s) in enumerate(zip(self.values, self.snapped())):
            out.append((z, _clean(value.real, self.tolerance), _clean(value.imag, self.tolerance), s))
        return out

    def to_dict(self):
        return {
            'n': self.modulus,
            'rows': [{'z': z, 're': re, 'im': im, 'snapped': s} for z, re, im, s in self.rows()],
        }


def _coefficients(f):
    if isinstance(f, ResidueMultiset):
        return f.modulus, np.array(f.counts, dtype=float)
    if isinstance(f, CyclicRingElem):
        return f.modulus, np.array(f.coeffs, dtype=float)
    arr = np.asarray([complex(v) for v in f])
    return len(arr), arr


def fourier(f, tolerance=None):
    """(Ff)(z) = sum_i f(i) zeta_n^(iz), summed over ascending i."""
    n, coeffs = _coefficients(f)
    idx = np.arange(n)
    # reduce the exponent before exp() to keep the phases accurate
    phases = np.exp(2j * np.pi * (np.outer(idx, idx) % n) / n)
    values = np.zeros(n, dtype=complex)
    for i in range(n):
        values += coeffs[i] * phases[i]
    if tolerance is None:
        tolerance = Config.spectral_tolerance(n)
    return SpectrumTable(n, values, tolerance)


def ramanujan(n, v, z):
    """Fourier transform of the orbit O_v at z; always an integer."""
    require_divisor(n, v)
    q = v // gcd(v, z % n)
    return int(mobius(q)) * int(totient(v)) // int(totient(q))


# ==================== Orbit decompositions ====================

@dataclass(frozen=True)
class OrbitDecomposition:
    modulus: int
    alpha: dict

    def reconstruct(self):
        """Σ alpha_v Δ_{O_v} as a list of Fractions."""
        values = [Fraction(0)] * self.modulus
        for v, a in self.alpha.items():
            for i in orbit(self.modulus, v).support():
                values[i] += a
        return values

    def to_dict(self):
        return {'n': self.modulus, 'alpha': {str(v): str(a) for v, a in self.alpha.items()}}


def orbit_decompose(f):
    """Coefficients alpha_v when f is constant on every unit-group orbit."""
    if isinstance(f, ResidueMultiset):
        n, values = f.modulus, [Fraction(c) for c in f.counts]
    else:
        values = [Fraction(c) for c in f]
        n = len(values)

    alpha = {}
    for v in divisors(n):
        members = orbit(n, v).support()
        first = members[0]
        for z in members[1:]:
            if values[z] != values[first]:
                raise NotOrbitConstant(first, z)
        alpha[v] = values[first]
    return OrbitDecomposition(n, alpha)


def quotient_char_index(n, v, j):
    """Index of the C_n character paired with the j-th character of C_n / <x^v>."""
    require_divisor(n, v)
    if not 0 <= j < v:
        raise OutOfRange(f'j must lie in 0..{v - 1}, got {j}')
    return (n // v) * j


# ==================== Two-valued spectra ====================

@dataclass(frozen=True)
class GammaData:
    c: int
    gamma: tuple
    delta: int
    s_set: tuple
    hypothesis: bool
    checks: dict = field(default_factory=dict)

    @property
    def checks_pass(self):
        return all(self.checks.values())

    def to_dict(self):
        return {
            'c': self.c,
            'gamma': list(self.gamma),
            'delta': self.delta,
            's_set': list(self.s_set),
            'hypothesis': self.hypothesis,
            'checks': dict(self.checks),
        }


def gamma_data(U, c, tolerance=None, strict=False):
    """
    Support Γ_c of the spectrum value c, δ_c = gcd(n, Γ_c) and S_c.

    When U also satisfies 0 ∉ U and Δ_U ≤ 2 the structural consequences are
    checked: U = -U, Z_n ∖ supp(U) = (n/δ_c)Z_n, |c| divides n, and U is an
    orbit union with multiplicities at most 2.
    """
    n = U.modulus
    table = fourier(U, tolerance)
    tol = table.tolerance
    gamma = []
    for z in range(1, n):
        value = table[z]
        if abs(value - c) <= tol:
            gamma.append(z)
        elif abs(value) > tol:
            raise SpectrumNotTwoValued(z, value)

    delta = n
    for z in gamma:
        delta = gcd(delta, z)
    s_set = tuple(v for v in divisors(n) if delta % v)

    hypothesis = U[0] == 0 and U.max_multiplicity <= 2
    checks = {}
    if hypothesis:
        complement = set(range(n)) - set(U.support())
        try:
            decomposition = orbit_decompose(U)
            orbit_ok = all(a in (0, 1, 2) for a in decomposition.alpha.values())
        except NotOrbitConstant:
            orbit_ok = False
        checks = {
            'symmetric': ms_negate(U) == U,
            'complement_is_subgroup': complement == set(subgroup(n, n // delta).support()),
            'c_divides_n': not gamma or (c != 0 and n % abs(c) == 0),
            'orbit_constant': orbit_ok,
        }
        if strict and not all(checks.values()):
            failed = [name for name, ok in checks.items() if not ok]
            logger.error('Two-valued multiset %s (c=%d) fails %s', U, c, failed)
            raise ConclusionFailed(f'{U} fails {", ".join(failed)}', failed=failed)

    return GammaData(c, tuple(gamma), delta, s_set, hypothesis, checks)


def two_valued_solutions(n, c):
    """
    Every nonempty multiset U on Z_n with 0 ∉ U, Δ_U ≤ 2 and all nonprincipal
    spectrum values in {0, c}, decided exactly by Ū² - cŪ = αC̄_n.
    """
    if not 2 <= n <= 12:
        raise OutOfRange(f'n must lie in 2..12 for the exhaustive search, got {n}')

    tails = np.array(list(itertools.product((0, 1, 2), repeat=n - 1)), dtype=np.int64)
    counts = np.hstack([np.zeros((len(tails), 1), dtype=np.int64), tails])
    square = np.zeros_like(counts)
    for s in range(n):
        square += counts[:, [s]] * np.roll(counts, s, axis=1)
    size = counts.sum(axis=1)
    scaled_alpha = size * (size - c)
    lhs = square - c * counts
    ok = (size > 0) & (scaled_alpha % n == 0) & np.all(lhs == (scaled_alpha // n)[:, None], axis=1)

    solutions = [ResidueMultiset(n, tuple(int(x) for x in row)) for row in counts[ok]]
    logger.debug('n=%d c=%d: %d two-valued multisets', n, c, len(solutions))
    return solutions


# ==================== Coset structure ====================

@dataclass(frozen=True)
class StructureReport:
    n: int
    c: int
    step: int
    E: tuple
    subgroup: tuple
    period: int
    passed: bool
    prime_power_checks: tuple = ()

    def to_dict(self):
        return {
            'n': self.n,
            'c': self.c,
            'step': self.step,
            'E': list(self.E),
            'subgroup': list(self.subgroup),
            'period': self.period,
            'passed': self.passed,
            'prime_power_checks': [list(item) for item in self.prime_power_checks],
        }


def period_subgroup(U):
    """Smallest divisor g of n with Δ_U(z + g) = Δ_U(z) for all z."""
    n = U.modulus
    for g in divisors(n):
        if all(U.counts[(z + g) % n] == U.counts[z] for z in range(n)):
            return g
    return n


def coset_factor(U):
    """(g, E') with U = E' + gZ_n and E' ⊆ {0..g-1}."""
    g = period_subgroup(U)
    return g, tuple(i for i in U if i < g)


def _step_for(n, c):
    if c % 2:
        return n // c if n % c == 0 else None
    return 2 * n // c if (2 * n) % c == 0 else None


def coset_structure_mod_c(U, c, tolerance=None):
    """
    When every nonprincipal spectrum value of U is a multiple of c and Δ_U ≤ 2,
    U must be a union of cosets of <x^(n/c)> (odd c) or <x^(2n/c)> (even c).
    """
    n = U.modulus
    if c <= 0:
        raise OutOfRange(f'c must be positive, got {c}')
    step = _step_for(n, c)
    if step is None:
        raise HypothesisFailed(f'c={c} must divide {"n" if c % 2 else "2n"} for n={n}')
    if U.max_multiplicity > 2:
        raise HypothesisFailed('multiplicities exceed 2', witness=U.counts.index(U.max_multiplicity))

    table = fourier(U, tolerance)
    for z, value in enumerate(table.snapped()):
        if z and (value is None or value % c):
            raise HypothesisFailed(f'spectrum value at z={z} is not a multiple of {c}', witness=z)

    period = period_subgroup(U)
    passed = step % period == 0

    prime_power_checks = []
    for p, beta in sorted(factorint(c).items()):
        q = p ** beta
        q_step = (n // q if n % q == 0 else None) if p != 2 else (2 * n // q if (2 * n) % q == 0 else None)
        if q_step is not None:
            prime_power_checks.append((q, q_step, q_step % period == 0))

    if not passed or not all(item[2] for item in prime_power_checks):
        logger.error('Coset structure fails for %s mod %d: period %d, step %d', U, c, period, step)
        raise ConclusionFailed(f'{U} is not a union of cosets of <x^{step}>', period=period, step=step)

    return StructureReport(
        n=n,
        c=c,
        step=step,
        E=tuple(i for i in U if i < step),
        subgroup=subgroup(n, step).support(),
        period=period,
        passed=passed,
        prime_power_checks=tuple(prime_power_checks),
    )
