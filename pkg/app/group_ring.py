"""
Exact integer group rings over the cyclic group C_n and the dihedral group D_n.

Elements of Z[D_n] are kept in the normal form P + Q.tau with P, Q in Z[C_n];
the relation tau.x = x^-1.tau is applied eagerly in dih_mul.
"""
from dataclasses import dataclass

from app.errors import InvalidSpec, ModulusMismatch


@dataclass(frozen=True)
class CyclicRingElem:
    """Sum of coeffs[i] * x^i over C_n."""
    modulus: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.modulus:
            raise InvalidSpec(f'expected {self.modulus} coefficients, got {len(coeffs)}')
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n):
        return cls(n, (1,) + (0,) * (n - 1))

    @classmethod
    def whole_group(cls, n):
        """C̄_n, every coefficient 1."""
        return cls(n, (1,) * n)

    @classmethod
    def from_exponents(cls, n, exponents):
        """X̄ for an exponent (multi)set; repeats accumulate."""
        coeffs = [0] * n
        for e in exponents:
            coeffs[int(e) % n] += 1
        return cls(n, tuple(coeffs))

    @property
    def augmentation(self):
        return sum(self.coeffs)

    def __add__(self, other):
        _check_same(self, other)
        return CyclicRingElem(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        _check_same(self, other)
        return CyclicRingElem(self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CyclicRingElem(self.modulus, tuple(-a for a in self.coeffs))

    def scale(self, k):
        return CyclicRingElem(self.modulus, tuple(k * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def first_difference(self, other):
        """Smallest index where the coefficients differ, or None."""
        _check_same(self, other)
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return i
        return None

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            base = 'e' if i == 0 else ('x' if i == 1 else f'x^{i}')
            terms.append(base if c == 1 else f'{c}{base}')
        return ' + '.join(terms) or '0'


@dataclass(frozen=True)
class DihedralRingElem:
    """p + q.tau in Z[D_n]."""
    p: CyclicRingElem
    q: CyclicRingElem

    def __post_init__(self):
        _check_same(self.p, self.q)

    @property
    def modulus(self):
        return self.p.modulus

    @classmethod
    def connection(cls, n, X, Y):
        """S̄ = X̄ + Ȳ.tau for Dih(n, X, Y)."""
        return cls(CyclicRingElem.from_exponents(n, X), CyclicRingElem.from_exponents(n, Y))

    @property
    def augmentation(self):
        return self.p.augmentation + self.q.augmentation

    def __add__(self, other):
        return DihedralRingElem(self.p + other.p, self.q + other.q)

    def __mul__(self, other):
        return dih_mul(self, other)


def _check_same(a, b):
    if a.modulus != b.modulus:
        raise ModulusMismatch(a.modulus, b.modulus)


def cyc_mul(a, b):
    """Schoolbook cyclic convolution."""
    _check_same(a, b)
    n = a.modulus
    out = [0] * n
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb:
                out[(i + j) % n] += ca * cb
    return CyclicRingElem(n, tuple(out))


def involution_inv(a):
    """a^(-1): the coefficient of x^i moves to x^-i."""
    n = a.modulus
    return CyclicRingElem(n, tuple(a.coeffs[(-i) % n] for i in range(n)))


def u_of(n, X):
    """Ū_X = X̄ + X̄^(-1)."""
    X = tuple(X)
    if any(x % n == 0 for x in X):
        raise InvalidSpec('0 in X')
    xbar = CyclicRingElem.from_exponents(n, X)
    return xbar + involution_inv(xbar)


def dih_mul(a, b):
    """(P1 + Q1.tau)(P2 + Q2.tau) = (P1 P2 + Q1 Q2^-1) + (P1 Q2 + Q1 P2^-1).tau"""
    _check_same(a, b)
    p = cyc_mul(a.p, b.p) + cyc_mul(a.q, involution_inv(b.q))
    q = cyc_mul(a.p, b.q) + cyc_mul(a.q, involution_inv(b.p))
    return DihedralRingElem(p, q)


def square_connection(spec):
    """S̄² for S = X u Y.tau; the tau part equals Ȳ.Ū_X."""
    s = DihedralRingElem.connection(spec.n, spec.X, spec.Y)
    return dih_mul(s, s)
