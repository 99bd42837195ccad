"""
Multisets of residues mod n: union, scaling, difference, negation, sumset,
orbits of the unit group, subgroups and coset expansion.
"""
from collections import Counter
from dataclasses import dataclass
from math import gcd

from app.errors import InvalidSpec, ModulusMismatch, OutOfRange
from app.group_ring import CyclicRingElem, cyc_mul
from app.utils import require_divisor


@dataclass(frozen=True)
class ResidueMultiset:
    """A multiset over Z_n stored as its multiplicity function."""
    modulus: int
    counts: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidSpec(f'modulus must be positive, got {self.modulus}')
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.modulus:
            raise InvalidSpec(f'expected {self.modulus} counts, got {len(counts)}')
        if any(c < 0 for c in counts):
            raise InvalidSpec('multiplicities must be non-negative')
        object.__setattr__(self, 'counts', counts)

    @classmethod
    def from_elements(cls, n, elements=()):
        """Build from residues with repeats; negatives are reduced mod n."""
        tally = Counter(int(e) % n for e in elements)
        return cls(n, tuple(tally.get(i, 0) for i in range(n)))

    def __iter__(self):
        """Elements in ascending order, repeated by multiplicity."""
        for i, c in enumerate(self.counts):
            for _ in range(c):
                yield i

    def __len__(self):
        return sum(self.counts)

    def __getitem__(self, i):
        return self.counts[i % self.modulus]

    def __contains__(self, i):
        return self.counts[i % self.modulus] > 0

    @property
    def cardinality(self):
        return sum(self.counts)

    @property
    def max_multiplicity(self):
        return max(self.counts, default=0)

    def is_set(self):
        return all(c <= 1 for c in self.counts)

    def support(self):
        return tuple(i for i, c in enumerate(self.counts) if c)

    def to_dict(self):
        return {'n': self.modulus, 'counts': list(self.counts)}

    def __str__(self):
        return '{' + ','.join(str(i) for i in self) + '}'


def _check_same(a, b):
    if a.modulus != b.modulus:
        raise ModulusMismatch(a.modulus, b.modulus)


def ms_union(a, b):
    """A ⊎ B: multiplicities add."""
    _check_same(a, b)
    return ResidueMultiset(a.modulus, tuple(x + y for x, y in zip(a.counts, b.counts)))


def ms_scale(k, a):
    """k ⊕ A."""
    if k < 0:
        raise InvalidSpec(f'scalar must be non-negative, got {k}')
    return ResidueMultiset(a.modulus, tuple(k * c for c in a.counts))


def ms_diff(a, b):
    """A ∖ B, clamped at zero."""
    _check_same(a, b)
    return ResidueMultiset(a.modulus, tuple(max(x - y, 0) for x, y in zip(a.counts, b.counts)))


def ms_negate(a):
    n = a.modulus
    return ResidueMultiset(n, tuple(a.counts[(-i) % n] for i in range(n)))


def ms_sumset(a, b):
    """A + B with counted multiplicities (cyclic convolution of the counts)."""
    _check_same(a, b)
    n = a.modulus
    return ResidueMultiset(n, cyc_mul(CyclicRingElem(n, a.counts), CyclicRingElem(n, b.counts)).coeffs)


def orbit(n, v):
    """Residues of additive order exactly v: {c·(n/v) : gcd(c, v) = 1}."""
    require_divisor(n, v)
    step = n // v
    return ResidueMultiset.from_elements(n, (c * step for c in range(1, v + 1) if gcd(c, v) == 1))


def subgroup(n, v):
    """vZ_n = {0, v, ..., n - v}."""
    require_divisor(n, v)
    return ResidueMultiset.from_elements(n, range(0, n, v))


def coset_expand(n, v, t):
    """Exponent multiset of T<x^v>: every element of T contributes a whole coset."""
    require_divisor(n, v)
    # T holds coset representatives in 0..v-1, as a sequence or a multiset over Z_v
    elements = tuple(t)
    bad = [e for e in elements if not 0 <= e < v]
    if bad:
        raise OutOfRange(f'element {bad[0]} of T is outside 0..{v - 1}', witness=bad[0])
    return ms_sumset(ResidueMultiset.from_elements(n, elements), subgroup(n, v))
