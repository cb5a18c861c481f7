"""Finite fields F_{p^m} with elements encoded as integers.

The element ``a = c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` (base ``p`` digits) stands
for the class of ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` modulo the field modulus.
Prime fields use modular arithmetic directly, the other fields use discrete
logarithm and Zech logarithm tables built once per field.
"""

import functools
import logging

import sympy

from ..conf import check_enumeration
from ..exceptions import InternalConsistencyError, ParameterError
from .base import CoefficientRing

# logger for this file
logger = logging.getLogger(__name__)

_X = sympy.Symbol("x")


def is_irreducible_mod_p(coefficients, p):
    """Irreducibility over F_p of the polynomial with coefficients ``coefficients`` (low degree first)"""
    poly = sympy.Poly(list(reversed(coefficients)), _X, modulus=p)
    return poly.is_irreducible


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p, m):
    """The lexicographically smallest monic irreducible polynomial of degree ``m`` over F_p.

    Polynomials are compared on ``(c_{m-1}, ..., c_0)``. The result lists the
    coefficients from degree 0 to ``m`` included.
    """
    for k in range(p ** m):
        coefficients = []
        for _ in range(m):
            k, digit = divmod(k, p)
            coefficients.append(digit)
        coefficients.append(1)
        if is_irreducible_mod_p(coefficients, p):
            return tuple(coefficients)
    raise InternalConsistencyError("no irreducible polynomial of degree %d over F_%d" % (m, p))


class FiniteField(CoefficientRing):
    """The field F_{p^m} = F_p[x]/(modulus)"""

    def __init__(self, p, m, modulus=None):
        if not sympy.isprime(p):
            raise ParameterError("the characteristic %s is not prime" % p)
        if m < 1:
            raise ParameterError("the degree %s should be positive" % m)

        check_enumeration("F_%d^%d" % (p, m), p ** m)

        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ParameterError("the modulus should be monic of degree %d" % m)
            if not is_irreducible_mod_p(modulus, p):
                raise ParameterError("the modulus %s is reducible over F_%d" % (modulus, p))

        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self.characteristic = p

        self._exp = None
        self._log = None
        self._zech = None
        if m > 1:
            self._build_tables()

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.m)

    def __reduce__(self):
        return (get_field, (self.p, self.m, self.modulus))

    # digits and polynomial view

    def digits(self, a):
        """Coefficients of ``a`` in the polynomial basis, low degree first"""
        result = []
        for _ in range(self.m):
            a, digit = divmod(a, self.p)
            result.append(digit)
        return result

    def from_digits(self, digits):
        value = 0
        for digit in reversed(list(digits)):
            value = value * self.p + (int(digit) % self.p)
        return value

    def _digit_mul(self, a, b):
        """Schoolbook multiplication in the polynomial basis (table construction only)"""
        p, m = self.p, self.m
        da, db = self.digits(a), self.digits(b)
        product = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    product[i + j] = (product[i + j] + ca * cb) % p
        for k in range(2 * m - 2, m - 1, -1):
            c = product[k]
            if c:
                for i in range(m):
                    product[k - m + i] = (product[k - m + i] - c * self.modulus[i]) % p
        return self.from_digits(product[:m])

    def _digit_add(self, a, b):
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _build_tables(self):
        order = self.q - 1
        prime_factors = sympy.primefactors(order)
        for candidate in range(self.p, self.q):
            if all(self._slow_pow(candidate, order // r) != 1 for r in prime_factors):
                generator = candidate
                break
        else:
            raise InternalConsistencyError("no primitive element in %r" % self)

        exp = [1] * order
        log = [-1] * self.q
        value = 1
        for k in range(order):
            exp[k] = value
            log[value] = k
            value = self._digit_mul(value, generator)

        zech = [-1] * order
        for k in range(order):
            s = self._digit_add(exp[k], 1)
            zech[k] = log[s] if s else -1

        self.generator = generator
        self._exp, self._log, self._zech = exp, log, zech
        logger.debug("[finite_fields|tables] built tables for %r, generator %d", self, generator)

    def _slow_pow(self, a, n):
        result, base = 1, a
        while n:
            if n & 1:
                result = self._digit_mul(result, base)
            base = self._digit_mul(base, base)
            n >>= 1
        return result

    # ring protocol

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def gen(self):
        """The class of ``x`` in F_p[x]/(modulus)"""
        if self.m > 1:
            return self.p
        return (-self.modulus[0]) % self.p

    def from_int(self, n):
        return int(n) % self.p

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.q

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        order = self.q - 1
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % order]
        if z < 0:
            return 0
        return self._exp[(la + z) % order]

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2 or a == 0:
            return a
        order = self.q - 1
        return self._exp[(self._log[a] + order // 2) % order]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of 0 in %r" % self)
            return 0 if n > 0 else 1
        if self.m == 1:
            return pow(a, n % (self.p - 1), self.p)
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def is_zero(self, a):
        return a == 0

    def equal(self, a, b):
        return a == b

    # field specific

    def elements(self):
        return range(self.q)

    def nonzero_elements(self):
        return range(1, self.q)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def pth_root(self, a):
        """The unique ``c`` with ``c^p = a``, namely ``a^{p^{m-1}}``"""
        return self.pow(a, self.q // self.p)

    def trace_to_prime(self, a):
        """Absolute trace F_{p^m} -> F_p"""
        total, conjugate = 0, a
        for _ in range(self.m):
            total = self.add(total, conjugate)
            conjugate = self.frobenius(conjugate)
        return total

    def random_element(self, rng):
        return rng.randrange(self.q)

    def format(self, a):
        return str(a)


@functools.lru_cache(maxsize=None)
def get_field(p, m, modulus=None):
    """Cached constructor of :class:`FiniteField`"""
    return FiniteField(p, m, modulus)


class FieldEmbedding(object):
    """Embedding F_{p^m} -> F_{p^n}, ``m`` dividing ``n``.

    The class of ``x`` in the small field is sent to the smallest root (as an
    integer) of the small modulus inside the large field.
    """

    def __init__(self, small, large):
        if small.p != large.p or large.m % small.m != 0:
            raise ParameterError("%r is not a subfield of %r" % (small, large))
        self.small = small
        self.large = large

        root = None
        for candidate in large.elements():
            value = 0
            for c in reversed(small.modulus):
                value = large.add(large.mul(value, candidate), large.from_int(c))
            if value == 0:
                root = candidate
                break
        if root is None:
            raise InternalConsistencyError("no root of the modulus of %r in %r" % (small, large))
        self.root = root

        powers = [1]
        for _ in range(small.m - 1):
            powers.append(large.mul(powers[-1], root))
        image = []
        for a in small.elements():
            value = 0
            for digit, power in zip(small.digits(a), powers):
                if digit:
                    value = large.add(value, large.mul(large.from_int(digit), power))
            image.append(value)
        self._image = image
        self._preimage = {b: a for a, b in enumerate(image)}

    def __call__(self, a):
        return self._image[a]

    def contains(self, b):
        return b in self._preimage

    def preimage(self, b):
        try:
            return self._preimage[b]
        except KeyError:
            raise ParameterError("%d of %r is not in the image of %r" % (b, self.large, self.small))

    def __repr__(self):
        return "FieldEmbedding(%r -> %r)" % (self.small, self.large)


@functools.lru_cache(maxsize=None)
def get_embedding(small, large):
    """Cached :class:`FieldEmbedding`, so that every caller agrees on the same embedding"""
    if small == large:
        return _IdentityEmbedding(small)
    return FieldEmbedding(small, large)


class _IdentityEmbedding(object):
    def __init__(self, field):
        self.small = self.large = field
        self.root = field.gen

    def __call__(self, a):
        return a

    def contains(self, b):
        return True

    def preimage(self, b):
        return b


def extension_field(field, d):
    """The field F_{q^d} over F_q = ``field`` with its default modulus"""
    return get_field(field.p, field.m * d)
