"""Dense univariate polynomials over a coefficient ring descriptor.

Division with remainder needs an invertible leading coefficient: any nonzero
divisor over a finite field, a monic divisor over a Galois ring.
"""

import functools
import itertools
import logging
import random

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from ..conf import check_enumeration
from ..exceptions import ParameterError
from .base import OperatorRing

# logger for this file
logger = logging.getLogger(__name__)


class Polynomial(object):
    """Polynomial with coefficients ``coeffs`` (low degree first) in ``ring``"""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, (c,))

    @classmethod
    def x(cls, ring):
        return cls(ring, (ring.zero, ring.one))

    @classmethod
    def monomial(cls, ring, c, n):
        return cls(ring, [ring.zero] * n + [c])

    # basic properties

    @property
    def degree(self):
        """Degree, ``-1`` for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_monic(self):
        return bool(self.coeffs) and self.ring.equal(self.coeffs[-1], self.ring.one)

    def coefficient(self, n):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ring.zero

    def valuation_at_zero(self):
        """Order of vanishing at ``x = 0``"""
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return i
        return None

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ParameterError("polynomials over %r and %r" % (self.ring, other.ring))
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, self.ring.from_int(other))
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] = ring.add(result[i], c)
        return Polynomial(ring, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(ring, ())
        result = [ring.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ring.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                result[i + j] = ring.add(result[i + j], ring.mul(ca, cb))
        return Polynomial(ring, result)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiplication by the ring element ``c``"""
        return Polynomial(self.ring, [self.ring.mul(c, a) for a in self.coeffs])

    def shift(self, n):
        """Multiplication by ``x^n``"""
        if not self.coeffs:
            return self
        return Polynomial(self.ring, [self.ring.zero] * n + list(self.coeffs))

    def __pow__(self, n):
        if n < 0:
            raise ParameterError("negative power of a polynomial")
        result = Polynomial.constant(self.ring, self.ring.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, self.ring.from_int(other))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(self.ring.equal(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    # division

    def _leading_inverse(self):
        lead = self.leading
        if self.ring.equal(lead, self.ring.one):
            return lead
        if hasattr(self.ring, "inv"):
            return self.ring.inv(lead)
        raise ParameterError("division by a non monic polynomial over %r" % self.ring)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        inverse = other._leading_inverse()
        remainder = list(self.coeffs)
        n = other.degree
        quotient = [ring.zero] * max(len(remainder) - n, 0)
        divisor = other.coeffs
        for k in range(len(remainder) - 1, n - 1, -1):
            c = remainder[k]
            if ring.is_zero(c):
                continue
            c = ring.mul(c, inverse)
            quotient[k - n] = c
            for i, d in enumerate(divisor):
                remainder[k - n + i] = ring.sub(remainder[k - n + i], ring.mul(c, d))
        return Polynomial(ring, quotient), Polynomial(ring, remainder[:n])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ParameterError("%s is not divisible by %s" % (self, other))
        return quotient

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self._leading_inverse())

    def powmod(self, n, modulus):
        result = Polynomial.constant(self.ring, self.ring.one) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            n >>= 1
            if n:
                base = (base * base) % modulus
        return result

    # evaluation and maps

    def __call__(self, value):
        ring = self.ring
        result = ring.zero
        for c in reversed(self.coeffs):
            result = ring.add(ring.mul(result, value), c)
        return result

    def evaluate_in(self, target, value, embed):
        """Horner evaluation in another ring, coefficients mapped by ``embed``"""
        result = target.zero
        for c in reversed(self.coeffs):
            result = target.add(target.mul(result, value), embed(c))
        return result

    def compose(self, other):
        result = Polynomial(self.ring, ())
        for c in reversed(self.coeffs):
            result = result * other + Polynomial.constant(self.ring, c)
        return result

    def derivative(self):
        ring = self.ring
        return Polynomial(ring, [ring.mul(ring.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def map_coefficients(self, fn, ring):
        return Polynomial(ring, [fn(c) for c in self.coeffs])

    def __repr__(self):
        return "Polynomial(%r, %r)" % (self.ring, self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        fmt = getattr(self.ring, "format", str)
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.ring.is_zero(c):
                continue
            coefficient = fmt(c)
            if i == 0:
                terms.append(coefficient)
                continue
            monomial = "x" if i == 1 else "x^%d" % i
            if self.ring.equal(c, self.ring.one):
                terms.append(monomial)
            else:
                terms.append("%s*%s" % (_bracket(coefficient), monomial))
        return "+".join(terms)


def _bracket(text):
    if any(sign in text for sign in "+-*") and not text.startswith("("):
        return "(%s)" % text
    return text


def gcd(a, b):
    """Monic gcd over a field"""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_irreducible(f):
    """Rabin test over a finite field"""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    field = f.ring
    q = field.q
    f = f.monic()
    x = Polynomial.x(field)
    if x.powmod(q ** n, f) != x % f:
        return False
    for r in _prime_divisors(n):
        h = x.powmod(q ** (n // r), f) - x
        if gcd(f, h).degree != 0:
            return False
    return True


def _prime_divisors(n):
    result, k = [], 2
    while k * k <= n:
        if n % k == 0:
            result.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        result.append(n)
    return result


def monic_polynomials(field, d):
    """All monic polynomials of degree ``d`` over ``field``, in increasing order"""
    check_enumeration("monic polynomials of degree %d over %r" % (d, field), field.q ** d)
    for tail in itertools.product(range(field.q), repeat=d):
        yield Polynomial(field, list(reversed(tail)) + [field.one])


@functools.lru_cache(maxsize=None)
def irreducible_polynomials(field, d):
    """Monic irreducible polynomials of degree ``d`` over ``field``, sorted"""
    result = tuple(f for f in monic_polynomials(field, d) if is_irreducible(f))
    logger.debug("[polynomials|irreducible] %d irreducibles of degree %d over %r", len(result), d, field)
    return result


def factor(f):
    """Factorisation of a nonzero polynomial over a finite field.

    Returns ``(unit, [(P, e), ...])`` with monic irreducible ``P`` sorted by
    degree then coefficients. Prime fields go through sympy's ``gf_factor``;
    over F_{p^m} the square-free parts are split by distinct-degree then
    equal-degree factorisation.
    """
    if f.is_zero():
        raise ParameterError("factorisation of the zero polynomial")
    field = f.ring
    unit = f.leading
    if f.degree <= 0:
        return unit, []
    if field.m == 1:
        _, pairs = gf_factor([ZZ(c) for c in reversed(f.coeffs)], field.p, ZZ)
        factors = [(Polynomial(field, [int(c) for c in reversed(g)]), int(e)) for g, e in pairs]
    else:
        rng = random.Random(0)
        factors = []
        for part, e in _square_free_parts(f.monic()):
            for block, d in _distinct_degree_parts(part):
                factors.extend((g, e) for g in _equal_degree_split(block, d, rng))
    factors.sort(key=lambda item: item[0].sort_key())
    return unit, factors


def _pth_root(f):
    """The polynomial ``g`` with ``g^p = f``, for ``f`` with zero derivative"""
    field = f.ring
    p = field.p
    return Polynomial(field, [field.pth_root(c) for c in f.coeffs[::p]])


def _square_free_parts(f):
    """Square-free monic ``g`` with multiplicity ``e``, ``f`` being the product of the ``g^e``"""
    one = Polynomial.constant(f.ring, f.ring.one)
    p = f.ring.p
    parts = []
    derivative = f.derivative()
    if derivative.is_zero():
        return [(g, e * p) for g, e in _square_free_parts(_pth_root(f))]
    c = gcd(f, derivative)
    w = f.exact_div(c)
    i = 1
    while w != one:
        y = gcd(w, c)
        block = w.exact_div(y)
        if block.degree > 0:
            parts.append((block, i))
        i += 1
        w = y
        c = c.exact_div(y)
    if c.degree > 0:
        parts.extend((g, e * p) for g, e in _square_free_parts(_pth_root(c)))
    return parts


def _distinct_degree_parts(f):
    """Products ``(g, d)`` of the irreducible factors of degree ``d`` of the square-free ``f``"""
    field = f.ring
    x = Polynomial.x(field)
    parts = []
    h = x % f
    d = 1
    while f.degree >= 2 * d:
        h = h.powmod(field.q, f)
        g = gcd(f, h - x)
        if g.degree > 0:
            parts.append((g, d))
            f = f.exact_div(g)
            h = h % f
        d += 1
    if f.degree > 0:
        parts.append((f, f.degree))
    return parts


def _equal_degree_split(f, d, rng):
    """Irreducible factors of ``f``, a product of distinct irreducibles of degree ``d``"""
    if f.degree == d:
        return [f]
    field = f.ring
    while True:
        a = Polynomial(field, [field.random_element(rng) for _ in range(f.degree)])
        if a.degree <= 0:
            continue
        if field.p == 2:
            # absolute trace a + a^2 + ... + a^{2^{md-1}} modulo f
            b = a % f
            term = b
            for _ in range(field.m * d - 1):
                term = (term * term) % f
                b = b + term
        else:
            b = a.powmod((field.q ** d - 1) // 2, f) - Polynomial.constant(field, field.one)
        u = gcd(f, b)
        if 0 < u.degree < f.degree:
            return _equal_degree_split(u, d, rng) + _equal_degree_split(f.exact_div(u), d, rng)


class PolynomialRing(OperatorRing):
    """Descriptor of ``base[x]`` for Witt vectors of polynomials"""

    def __init__(self, base):
        self.base = base
        self.characteristic = base.characteristic

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.base == other.base

    def __hash__(self):
        return hash(("poly", self.base))

    def __repr__(self):
        return "%r[x]" % self.base

    def from_int(self, n):
        return Polynomial.constant(self.base, self.base.from_int(n))

    def equal(self, a, b):
        return a == b

    def contains(self, a):
        return isinstance(a, Polynomial) and a.ring == self.base
