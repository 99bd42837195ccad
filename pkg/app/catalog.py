"""
Catalog of directed strongly regular dihedrants.

Generators for the two coset constructions, checkers for the odd-order and
involution theorems, the classifier for Dih(n, X, X) and brute-force oracles.
Every emitted entry is re-verified by the adjacency-matrix oracle.
"""
import itertools
import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional

from app.dsrg_verify import verify_group_ring, verify_matrix, verify_spectral
from app.errors import (ConclusionFailed, ConditionFail, InvalidSpec, NoCaseMatched,
                        NotDsrg, OutOfRange, VerifierDisagreement)
from app.group_ring import CyclicRingElem, cyc_mul, involution_inv
from app.models import ClassificationEntry, DihedrantSpec, DsrgParams
from app.residue_multiset import ResidueMultiset, coset_expand
from app.spectrum import period_subgroup
from app.utils import divisors, parallel_map, require_divisor
from config import Config

logger = logging.getLogger(__name__)

CHUNK_BITS = 8


def _oracle_confirms(spec, params):
    """Matrix oracle must return exactly params."""
    try:
        found = verify_matrix(spec)
    except NotDsrg as exc:
        logger.error('Oracle rejects %s claimed as %s: %s', spec.to_dict(), params, exc.message)
        raise ConclusionFailed(f'oracle rejects Dih({spec.n},{list(spec.X)},{list(spec.Y)})',
                               witness=exc.details.get('witness'))
    if found != params:
        logger.error('Oracle gives %s for %s, claimed %s', found, spec.to_dict(), params)
        raise ConclusionFailed(f'oracle parameters {found} differ from claimed {params}')
    return found


# ==================== Transversal conditions ====================

def _check_transversal(v, T):
    """T ⊆ {1..v-1} holding exactly one of every pair {j, v-j}."""
    members = set(T)
    for t in members:
        if not 1 <= t < v:
            raise ConditionFail('range', witness=t, message=f'{t} is outside 1..{v - 1}')
    for j in range(1, v):
        pair = sorted({j, v - j})
        # a self-paired residue v/2 can never be chosen exactly once
        if len(pair) == 1 or (j in members) == (v - j in members):
            raise ConditionFail('transversal', witness=pair,
                                message=f'exactly one of {pair} must be chosen')


def _check_c52(v, T):
    """Conditions (i)-(iii) on T' ⊆ {1..2v-1}."""
    m = 2 * v
    members = set(T)
    for t in members:
        if not 1 <= t < m:
            raise ConditionFail('range', witness=t, message=f'{t} is outside 1..{m - 1}')
    if v not in members:
        raise ConditionFail('i', witness=v, message=f'{v} must belong to T\'')
    for j in range(1, v):
        pair = [j, m - j]
        if (j in members) == (m - j in members):
            raise ConditionFail('ii', witness=pair, message=f'exactly one of {pair} must be chosen')
    for r in range(m):
        if r not in members and (r + v) % m not in members:
            raise ConditionFail('iii', witness=r, message=f'neither {r} nor {(r + v) % m} is chosen')


def _pair_transversals(v):
    """All subsets of {1..v-1} with one element from each pair {j, v-j}, ascending."""
    if v % 2 == 0:
        return []
    pairs = [(j, v - j) for j in range(1, (v - 1) // 2 + 1)]
    return sorted(tuple(sorted(choice)) for choice in itertools.product(*pairs))


def _c52_candidates(v):
    """
    Every T' meeting conditions (i)-(iii), ascending.

    Conditions (ii) and (iii) together force j and v - j to be chosen or
    dropped as a pair, so T' is fixed by one choice per j in 1..v//2:
    either {j, v-j} or its mirror {2v-j, v+j}.
    """
    m = 2 * v
    options = [({j, v - j}, {m - j, v + j}) for j in range(1, v // 2 + 1)]
    found = []
    for choice in itertools.product(*options):
        T = tuple(sorted(set().union({v}, *choice)))
        _check_c52(v, T)
        found.append(T)
    return sorted(found)


# ==================== Constructions ====================

def c51_params(n, v):
    l = n // v
    half = (n - l) // 2
    return DsrgParams(2 * n, n - l, half, half - l, half)


def c52_params(n, v):
    l = n // (2 * v)
    return DsrgParams(2 * n, n, n // 2 + l, n // 2 - l, n // 2 + l)


def gen_c51(n, v, T, verify=True):
    """X = T + vZ_n for an odd divisor v and a pair transversal T."""
    require_divisor(n, v)
    if v < 3 or v % 2 == 0:
        raise InvalidSpec(f'v must be an odd divisor of n with v >= 3, got {v}')
    _check_transversal(v, T)
    X = coset_expand(n, v, T).support()
    spec = DihedrantSpec(n, X, X)
    params = c51_params(n, v)
    if verify:
        _oracle_confirms(spec, params)
    return spec, params


def gen_c52(n, v, T, verify=True):
    """X = T' + 2vZ_n for v >= 2 with 2v | n."""
    if v < 2:
        raise InvalidSpec(f'v must be at least 2, got {v}')
    require_divisor(n, 2 * v)
    _check_c52(v, T)
    X = coset_expand(n, 2 * v, T).support()
    spec = DihedrantSpec(n, X, X)
    params = c52_params(n, v)
    if verify:
        _oracle_confirms(spec, params)
    return spec, params


def enumerate_construction(n, which):
    """Every valid (v, T) of one construction, lexicographic in (v, T)."""
    if n < 3:
        raise OutOfRange(f'n must be at least 3, got {n}')
    entries = []
    if which == 'c51':
        for v in divisors(n):
            if v >= 3 and v % 2:
                for T in _pair_transversals(v):
                    spec, params = gen_c51(n, v, T)
                    entries.append(ClassificationEntry('a', n, v, T, spec.X, params))
    elif which == 'c52':
        for v in divisors(n):
            if v >= 2 and n % (2 * v) == 0:
                for T in _c52_candidates(v):
                    spec, params = gen_c52(n, v, T)
                    entries.append(ClassificationEntry('b', n, v, T, spec.X, params))
    else:
        raise InvalidSpec(f'unknown construction {which!r}')
    return entries


# ==================== Theorem checkers ====================

def _first_difference(lhs, rhs, condition):
    index = lhs.first_difference(rhs)
    if index is not None:
        raise ConditionFail(condition, witness=index,
                            message=f'condition ({condition}) fails at coefficient x^{index}')


def check_t11(n, X, Y, epsilon, b_shift=0):
    """
    n odd, X̄ + X̄^(-1) = C̄_n - e and ȲȲ^(-1) - X̄X̄^(-1) = εC̄_n.
    The graph checked is Dih(n, X, x^b Y) with b = b_shift.
    """
    if n < 3 or n % 2 == 0:
        raise InvalidSpec(f'n must be odd and at least 3, got {n}')
    if epsilon not in (0, 1):
        raise InvalidSpec(f'epsilon must be 0 or 1, got {epsilon}')
    xbar = CyclicRingElem.from_exponents(n, X)
    ybar = CyclicRingElem.from_exponents(n, Y)
    whole = CyclicRingElem.whole_group(n)
    e = CyclicRingElem.identity(n)

    _first_difference(xbar + involution_inv(xbar), whole - e, 'i')
    _first_difference(cyc_mul(ybar, involution_inv(ybar)) - cyc_mul(xbar, involution_inv(xbar)),
                      whole.scale(epsilon), 'ii')

    spec = DihedrantSpec(n, tuple(X), tuple((y + b_shift) % n for y in Y))
    params = DsrgParams(2 * n, n - 1 + epsilon, (n - 1) // 2 + epsilon,
                        (n - 3) // 2 + epsilon, (n - 1) // 2 + epsilon)
    _oracle_confirms(spec, params)
    return spec, params


@dataclass(frozen=True)
class InvolutionReport:
    """Printed parameters of the involution theorem next to the oracle verdict."""
    spec: DihedrantSpec
    printed: DsrgParams
    oracle: Optional[DsrgParams]
    witness: Optional[tuple]

    @property
    def matches(self):
        return self.oracle == self.printed

    def to_dict(self):
        return {
            'spec': self.spec.to_dict(),
            'printed': self.printed.to_dict(),
            'oracle': self.oracle.to_dict() if self.oracle else None,
            'witness': list(self.witness) if self.witness else None,
            'matches': self.matches,
        }


def check_t13(n, X, Y):
    """
    n even, c = x^(n/2): X̄ + X̄^(-1) = C̄_n - e - c, Y ∈ {X, X^(-1)}, X̄c = X̄^(-1).
    The oracle verdict is reported next to the printed parameters; mismatches are not hidden.
    """
    if n < 4 or n % 2:
        raise InvalidSpec(f'n must be even and at least 4, got {n}')
    half = n // 2
    xbar = CyclicRingElem.from_exponents(n, X)
    inv_x = involution_inv(xbar)
    involution = CyclicRingElem.from_exponents(n, [half])
    whole = CyclicRingElem.whole_group(n)
    e = CyclicRingElem.identity(n)

    _first_difference(xbar + inv_x, whole - e - involution, 'i')
    ys = set(y % n for y in Y)
    if ys not in (set(x % n for x in X), set((-x) % n for x in X)):
        raise ConditionFail('ii', witness=sorted(ys), message='Y must equal X or X^(-1)')
    _first_difference(cyc_mul(xbar, involution), inv_x, 'iii')

    spec = DihedrantSpec(n, tuple(X), tuple(Y))
    printed = DsrgParams(2 * n, n - 1, half - 1, half - 1, half)
    try:
        oracle, witness = verify_matrix(spec), None
    except NotDsrg as exc:
        oracle, witness = None, exc.witness
    report = InvolutionReport(spec, printed, oracle, witness)
    if not report.matches:
        logger.warning('Dih(%d,%s,%s): printed %s, oracle %s', n, list(spec.X), list(spec.Y),
                       printed, oracle if oracle else f'NotDsrg at {witness}')
    return report


# ==================== Classification of Dih(n, X, X) ====================

def structure_report(n, X, params):
    """Recover (case, v, T) for an accepted Dih(n, X, X)."""
    X = tuple(sorted(X))
    c = params.dsrg_mu - params.dsrg_lambda
    if c <= 0 or n % c:
        logger.error('Dih(%d,%s,%s) has mu - lambda = %d', n, list(X), list(X), c)
        raise NoCaseMatched(f'mu - lambda = {c} does not divide n = {n}')
    v = n // c
    period = period_subgroup(ResidueMultiset.from_elements(n, X))

    matches = []
    if v >= 3 and v % period == 0:
        T = tuple(x for x in X if x < v)
        try:
            _check_transversal(v, T)
            if params == c51_params(n, v):
                matches.append(ClassificationEntry('a', n, v, T, X, params))
        except ConditionFail:
            pass
    if v >= 2 and n % (2 * v) == 0 and (2 * v) % period == 0:
        T = tuple(x for x in X if x < 2 * v)
        try:
            _check_c52(v, T)
            if params == c52_params(n, v):
                matches.append(ClassificationEntry('b', n, v, T, X, params))
        except ConditionFail:
            pass

    if len(matches) != 1:
        logger.error('Dih(%d,%s,%s) %s matches %d cases', n, list(X), list(X), params, len(matches))
        raise NoCaseMatched(f'X={list(X)} matches {len(matches)} cases', X=list(X))
    return matches[0]


def _check_cardinalities(entry):
    """Case (a): |T| = (v-1)/2, |X| = (n - n/v)/2. Case (b): |T'| = v, |X| = n/2."""
    n, v = entry.n, entry.v
    if entry.case == 'a':
        expected = ((v - 1) // 2, (n - n // v) // 2)
    else:
        expected = (v, n // 2)
    if (len(entry.T), len(entry.X)) != expected:
        logger.error('Entry %s has |T|, |X| = %d, %d', entry.to_dict(), len(entry.T), len(entry.X))
        raise ConclusionFailed(f'case ({entry.case}) entry with v={v} has the wrong size', X=list(entry.X))


def classify_xx(n):
    """All X with Dih(n, X, X) a genuine DSRG, generated from the two coset cases."""
    if not 3 <= n <= Config.DSRG_MAX_CLASSIFY_N:
        raise OutOfRange(f'n must lie in 3..{Config.DSRG_MAX_CLASSIFY_N}, got {n}')
    entries = []
    for v in divisors(n):
        if v >= 3:
            for T in _pair_transversals(v):
                X = coset_expand(n, v, T).support()
                entries.append(ClassificationEntry('a', n, v, T, X, c51_params(n, v)))
    entries.extend(enumerate_construction(n, 'c52'))

    kept = {}
    for entry in sorted(entries, key=lambda e: (e.v, e.case, e.T)):
        kept.setdefault(entry.X, entry)
    result = sorted(kept.values(), key=ClassificationEntry.sort_key)
    for entry in result:
        _check_cardinalities(entry)
        _oracle_confirms(DihedrantSpec(n, entry.X, entry.X), entry.params)
    logger.info('n=%d: %d classified dihedrants', n, len(result))
    return result


def twist_variant(spec, unit, shift=0):
    """Dih(n, uX, x^b uX) for a unit u of Z_n."""
    n = spec.n
    if gcd(unit, n) != 1:
        raise InvalidSpec(f'{unit} is not a unit mod {n}')
    X = tuple(sorted((unit * x) % n for x in spec.X))
    return DihedrantSpec(n, X, tuple(sorted((x + shift) % n for x in X)))


# ==================== Brute-force oracles ====================

def _subset(mask, offset=1):
    return tuple(i + offset for i in range(mask.bit_length()) if mask >> i & 1)


def _chunks(total):
    size = 1 << CHUNK_BITS
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _xx_chunk(task):
    n, start, stop = task
    found = []
    for mask in range(max(start, 1), stop):
        X = _subset(mask)
        try:
            params = verify_matrix(DihedrantSpec(n, X, X))
        except NotDsrg:
            continue
        if params.genuine:
            found.append((X, params))
    return found


def brute_force_xx(n, threads=None):
    """Every X ⊆ {1..n-1} with Dih(n, X, X) a genuine DSRG, by the matrix oracle."""
    if not 3 <= n <= Config.DSRG_MAX_BRUTE_N:
        raise OutOfRange(f'n must lie in 3..{Config.DSRG_MAX_BRUTE_N}, got {n}')
    threads = Config.DSRG_THREADS if threads is None else threads
    tasks = [(n, start, stop) for start, stop in _chunks(1 << (n - 1))]
    results = [item for chunk in parallel_map(_xx_chunk, tasks, threads) for item in chunk]
    return sorted(results, key=lambda item: item[0])


def _xy_chunk(task):
    n, start, stop = task
    found = []
    for x_mask in range(start, stop):
        X = _subset(x_mask)
        for y_mask in range(1 << n):
            if not x_mask and not y_mask:
                continue
            Y = _subset(y_mask, offset=0)
            try:
                params = verify_matrix(DihedrantSpec(n, X, Y))
            except NotDsrg:
                continue
            if params.genuine:
                found.append((X, Y, params))
    return found


def brute_force_xy(n, threads=None):
    """Every (X, Y) with Dih(n, X, Y) a genuine DSRG, by the matrix oracle."""
    if not 3 <= n <= Config.DSRG_MAX_BRUTE_XY_N:
        raise OutOfRange(f'n must lie in 3..{Config.DSRG_MAX_BRUTE_XY_N}, got {n}')
    threads = Config.DSRG_THREADS if threads is None else threads
    tasks = [(n, x_mask, x_mask + 1) for x_mask in range(1 << (n - 1))]
    results = [item for chunk in parallel_map(_xy_chunk, tasks, threads) for item in chunk]
    return sorted(results, key=lambda item: (item[0], item[1]))


def odd_order_closure(n, threads=None):
    """
    Compare brute_force_xy(n) with the odd-order theorem for odd n.
    Returns the pairs only one side accepts; both lists are empty when they agree.
    """
    if n % 2 == 0:
        raise InvalidSpec(f'n must be odd, got {n}')
    brute = {(X, Y) for X, Y, _ in brute_force_xy(n, threads)}
    theorem = set()
    for x_mask in range(1, 1 << (n - 1)):
        X = _subset(x_mask)
        for y_mask in range(1, 1 << n):
            Y = _subset(y_mask, offset=0)
            for epsilon in (0, 1):
                try:
                    check_t11(n, X, Y, epsilon)
                except ConditionFail:
                    continue
                theorem.add((X, Y))
    return {
        'n': n,
        'accepted': len(brute),
        'oracle_only': sorted(brute - theorem),
        'theorem_only': sorted(theorem - brute),
    }


# ==================== Verifier agreement ====================

@dataclass(frozen=True)
class AgreementSummary:
    n: int
    subsets: int
    accepted: tuple
    disagreements: tuple
    spectral_failures: tuple

    def to_dict(self):
        return {
            'n': self.n,
            'subsets': self.subsets,
            'accepted': [[list(X), p.to_dict()] for X, p in self.accepted],
            'disagreements': [list(X) for X in self.disagreements],
            'spectral_failures': [list(X) for X in self.spectral_failures],
        }


def _outcome(verifier, spec):
    try:
        return verifier(spec)
    except NotDsrg:
        return None


def _agreement_chunk(task):
    n, start, stop = task
    accepted, disagreements, spectral_failures = [], [], []
    for mask in range(max(start, 1), stop):
        X = _subset(mask)
        spec = DihedrantSpec(n, X, X)
        by_matrix = _outcome(verify_matrix, spec)
        by_ring = _outcome(verify_group_ring, spec)
        if by_matrix != by_ring:
            disagreements.append(X)
        elif by_matrix is not None:
            accepted.append((X, by_matrix))
            if not verify_spectral(spec, by_matrix):
                spectral_failures.append(X)
    return accepted, disagreements, spectral_failures


def agreement_sweep(n, threads=None, strict=False):
    """Run the matrix and group-ring verifiers on every Dih(n, X, X), X nonempty."""
    if not 2 <= n <= Config.DSRG_MAX_BRUTE_N:
        raise OutOfRange(f'n must lie in 2..{Config.DSRG_MAX_BRUTE_N}, got {n}')
    threads = Config.DSRG_THREADS if threads is None else threads
    total = 1 << (n - 1)
    tasks = [(n, start, stop) for start, stop in _chunks(total)]
    accepted, disagreements, spectral_failures = [], [], []
    for a, d, s in parallel_map(_agreement_chunk, tasks, threads):
        accepted.extend(a)
        disagreements.extend(d)
        spectral_failures.extend(s)
    if disagreements:
        logger.warning('n=%d: verifiers disagree on %d subsets', n, len(disagreements))
        if strict:
            raise VerifierDisagreement(f'verifiers disagree on X={list(disagreements[0])}',
                                       X=list(disagreements[0]))
    return AgreementSummary(n, total - 1, tuple(accepted), tuple(disagreements), tuple(spectral_failures))
