"""
Value objects passed between the verifiers, the catalog, the CLI and the API.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from app.errors import InvalidSpec


def _number(value):
    """JSON-friendly form of an int or Fraction."""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return value


@dataclass(frozen=True)
class DihedrantSpec:
    """Dih(n, X, Y) = Cay(D_n, X u Y.tau), stored by exponents."""
    n: int
    X: tuple
    Y: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec(f'n must be positive, got {self.n}')
        xs = tuple(sorted({int(i) % self.n for i in self.X}))
        ys = tuple(sorted({int(i) % self.n for i in self.Y}))
        if len(xs) != len(tuple(self.X)) or len(ys) != len(tuple(self.Y)):
            raise InvalidSpec('X and Y must not repeat residues')
        if 0 in xs:
            raise InvalidSpec('0 in X would put the identity in the connection set')
        object.__setattr__(self, 'X', xs)
        object.__setattr__(self, 'Y', ys)

    @property
    def k(self):
        return len(self.X) + len(self.Y)

    def to_dict(self):
        return {'n': self.n, 'X': list(self.X), 'Y': list(self.Y)}


@dataclass(frozen=True)
class DsrgParams:
    """Parameter tuple (N, k, mu, lambda, t); N is the vertex count."""
    N: int
    k: int
    dsrg_mu: int
    dsrg_lambda: int
    t: int

    @property
    def genuine(self):
        return 0 < self.t < self.k

    def as_tuple(self):
        return (self.N, self.k, self.dsrg_mu, self.dsrg_lambda, self.t)

    def satisfies_counting_identity(self):
        """k(k + (mu - lambda)) = t + (N - 1) mu."""
        return self.k * (self.k + self.dsrg_mu - self.dsrg_lambda) == self.t + (self.N - 1) * self.dsrg_mu

    def to_dict(self):
        return {
            'N': self.N,
            'k': self.k,
            'mu': self.dsrg_mu,
            'lambda': self.dsrg_lambda,
            't': self.t,
        }

    def __str__(self):
        return '(' + ','.join(str(v) for v in self.as_tuple()) + ')'


@dataclass(frozen=True)
class EigenData:
    d: int
    rho: Fraction
    sigma: Fraction
    m_rho: Fraction
    m_sigma: Fraction

    @property
    def feasible(self):
        return all(isinstance(v, int) or v.denominator == 1 for v in (self.rho, self.sigma, self.m_rho, self.m_sigma)) \
            and self.m_rho >= 0 and self.m_sigma >= 0

    def to_dict(self):
        return {
            'd': self.d,
            'rho': _number(self.rho),
            'sigma': _number(self.sigma),
            'm_rho': _number(self.m_rho),
            'm_sigma': _number(self.m_sigma),
            'feasible': self.feasible,
        }


@dataclass(frozen=True)
class ClassificationEntry:
    """One classified Dih(n, X, X): case tag, v, transversal and parameters."""
    case: str
    n: int
    v: int
    T: tuple
    X: tuple
    params: DsrgParams

    def sort_key(self):
        return (self.case, self.v, self.X)

    def to_dict(self):
        return {
            'case': self.case,
            'n': self.n,
            'v': self.v,
            'T': list(self.T),
            'X': list(self.X),
            'params': self.params.to_dict(),
        }


@dataclass(frozen=True)
class VerifierVotes:
    matrix: bool
    group_ring: bool
    spectral: bool

    def to_dict(self):
        return {'matrix': self.matrix, 'group_ring': self.group_ring, 'spectral': self.spectral}


@dataclass(frozen=True)
class Certificate:
    """Evidence bundle for an accepted dihedrant."""
    spec: DihedrantSpec
    params: DsrgParams
    eigen: Optional[EigenData]
    votes: VerifierVotes
    classification: Optional[ClassificationEntry] = field(default=None)

    def to_dict(self):
        data = {
            'n': self.spec.n,
            'X': list(self.spec.X),
            'Y': list(self.spec.Y),
            'params': self.params.to_dict(),
            'genuine': self.params.genuine,
            'eigen': self.eigen.to_dict() if self.eigen else None,
            'verifier_votes': self.votes.to_dict(),
        }
        if self.classification is not None:
            data['classification'] = self.classification.to_dict()
        return data
