"""Galois rings GR(p^l, m) = (Z/p^l)[x]/(g) and their additive characters.

Elements are tuples of ``m`` integers in ``[0, p^l)``, the coefficients of the
residue polynomial. The modulus ``g`` is the coefficient-wise integer lift of
the modulus of the residue field.
"""

import functools
import logging

from ..conf import check_enumeration, setting
from ..exceptions import InternalConsistencyError, ParameterError
from .base import CoefficientRing
from .cyclotomic import CyclotomicInteger
from .finite_fields import get_embedding, get_field
from .polynomials import Polynomial
from .witt import WittParams, WittVector

# logger for this file
logger = logging.getLogger(__name__)


class GaloisRing(CoefficientRing):
    """The ring GR(p^l, m) with residue field F_{p^m}"""

    def __init__(self, p, l, m, field=None):
        self.params = WittParams(p, l)
        self.p, self.l, self.m = p, l, m
        self.field = field if field is not None else get_field(p, m)
        if (self.field.p, self.field.m) != (p, m):
            raise ParameterError("%r is not the residue field of GR(%d^%d,%d)" % (self.field, p, l, m))
        self.characteristic = p ** l
        self.modulus = tuple(self.field.modulus)
        self.size = p ** (l * m)
        self._teichmuller = {}
        self._teichmuller_complete = False

        # absolute traces of the basis x^k, the trace is Z/p^l linear
        powers = [self.from_coefficients([0] * k + [1]) if k < m else None for k in range(2 * m - 1)]
        for k in range(m, 2 * m - 1):
            powers[k] = self.mul(powers[k - 1], self.gen)
        self._basis_traces = tuple(
            sum(powers[k + j][j] for j in range(m)) % self.characteristic for k in range(m)
        )

    def __eq__(self, other):
        return isinstance(other, GaloisRing) and (self.p, self.l, self.field) == (other.p, other.l, other.field)

    def __hash__(self):
        return hash(("GR", self.p, self.l, self.field))

    def __repr__(self):
        return "GR(%d^%d,%d)" % (self.p, self.l, self.m)

    def __reduce__(self):
        return (galois_ring_over, (self.field, self.l))

    # elements

    def from_coefficients(self, coefficients):
        """Class of the integer polynomial with the given coefficients (low degree first)"""
        coefficients = [int(c) for c in coefficients]
        if len(coefficients) > self.m:
            return self._reduce_product(coefficients)
        n = self.characteristic
        return tuple(c % n for c in coefficients) + (0,) * (self.m - len(coefficients))

    def _reduce_product(self, product):
        m, n, g = self.m, self.characteristic, self.modulus
        product = list(product)
        for k in range(len(product) - 1, m - 1, -1):
            c = product[k] % n
            if c:
                for i in range(m):
                    product[k - m + i] -= c * g[i]
        return tuple(c % n for c in product[:m])

    @property
    def zero(self):
        return (0,) * self.m

    @property
    def one(self):
        return (1,) + (0,) * (self.m - 1)

    @property
    def gen(self):
        """The class of ``x``"""
        if self.m == 1:
            return ((-self.modulus[0]) % self.characteristic,)
        return (0, 1) + (0,) * (self.m - 2)

    def from_int(self, n):
        return (int(n) % self.characteristic,) + (0,) * (self.m - 1)

    def contains(self, a):
        return isinstance(a, tuple) and len(a) == self.m

    def add(self, a, b):
        n = self.characteristic
        return tuple((x + y) % n for x, y in zip(a, b))

    def sub(self, a, b):
        n = self.characteristic
        return tuple((x - y) % n for x, y in zip(a, b))

    def neg(self, a):
        n = self.characteristic
        return tuple((-x) % n for x in a)

    def mul(self, a, b):
        m, n = self.m, self.characteristic
        if m == 1:
            return ((a[0] * b[0]) % n,)
        product = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        return self._reduce_product(product)

    def scale(self, c, a):
        """Multiplication by the integer ``c``"""
        n = self.characteristic
        return tuple((c * x) % n for x in a)

    def is_zero(self, a):
        return not any(a)

    def equal(self, a, b):
        return a == b

    def reduce(self, a):
        """Reduction modulo ``p`` into the residue field"""
        return self.field.from_digits([c % self.p for c in a])

    def lift(self, a):
        """Lift of a residue field element with coefficients in ``[0, p)``"""
        return tuple(self.field.digits(a))

    def index(self, a):
        """Integer encoding of ``a``, used for lookup tables"""
        n = self.characteristic
        value = 0
        for c in reversed(a):
            value = value * n + c
        return value

    def element(self, index):
        n = self.characteristic
        coefficients = []
        for _ in range(self.m):
            index, c = divmod(index, n)
            coefficients.append(c)
        return tuple(coefficients)

    def elements(self):
        check_enumeration(repr(self), self.size)
        return (self.element(k) for k in range(self.size))

    # Teichmuller lifts and digits

    def teichmuller_lift(self, a):
        """The unique ``x`` with ``x = a mod p`` and ``x^{p^m} = x``"""
        try:
            return self._teichmuller[a]
        except KeyError:
            pass
        q = self.field.q
        cap = setting("WITTSUM_TEICHMULLER_ITERATIONS_FACTOR") * self.l
        y = self.lift(a)
        for _ in range(cap + 1):
            z = self.pow(y, q)
            if z == y:
                self._teichmuller[a] = y
                return y
            y = z
        raise InternalConsistencyError("Teichmuller iteration for %d in %r did not stabilise" % (a, self))

    def teichmuller_set(self):
        """The ``p^m`` Teichmuller elements, indexed by residue field element"""
        if not self._teichmuller_complete:
            check_enumeration("Teichmuller set of %r" % self, self.field.q)
            field = self.field
            if field.m > 1:
                # [g^k] = [g]^k for the primitive element g of the residue field
                generator = self.teichmuller_lift(field.generator)
                value = self.one
                for k in range(field.q - 1):
                    self._teichmuller[field._exp[k]] = value
                    value = self.mul(value, generator)
                self._teichmuller[0] = self.zero
            else:
                for a in field.elements():
                    self.teichmuller_lift(a)
            self._teichmuller_complete = True
        return [self._teichmuller[a] for a in self.field.elements()]

    def teichmuller_digits(self, x):
        """The ``b_i`` with ``x = sum p^i [b_i]``"""
        digits = []
        current = x
        for _ in range(self.l):
            b = self.reduce(current)
            digits.append(b)
            current = tuple(c // self.p for c in self.sub(current, self.teichmuller_lift(b)))
        return digits

    def from_teichmuller_digits(self, digits):
        total = self.zero
        scale = 1
        for b in digits:
            if b:
                total = self.add(total, self.scale(scale, self.teichmuller_lift(b)))
            scale *= self.p
        return total

    def witt_digits(self, x):
        """The Witt vector ``w(x)`` over the residue field.

        With ``x = sum p^i [b_i]`` the coordinates are ``b_i^{p^i}``, since
        ``V = p F^{-1}`` over a perfect field.
        """
        field = self.field
        digits = self.teichmuller_digits(x)
        coords = [field.pow(b, self.p ** i) for i, b in enumerate(digits)]
        return WittVector(field, self.params, coords)

    def from_digits(self, coords):
        """Inverse of :meth:`witt_digits`, accepts a Witt vector or a coordinate list"""
        field = self.field
        m = field.m
        digits = [field.pow(a, self.p ** ((-i) % m)) for i, a in enumerate(coords)]
        return self.from_teichmuller_digits(digits)

    def ring_frobenius(self, x, times=1):
        """The Frobenius automorphism, ``p``-th powers on Teichmuller digits"""
        field = self.field
        power = self.p ** (times % self.m) if self.m > 1 else 1
        return self.from_teichmuller_digits([field.pow(b, power) for b in self.teichmuller_digits(x)])

    def teichmuller_expansion(self, f):
        """Writes the polynomial ``f`` as ``f_0 + p f_1 + ... + p^{l-1} f_{l-1}``.

        The ``f_i`` have Teichmuller coefficients, they are returned as
        polynomials over the residue field (the reductions of their coefficients).
        """
        columns = [self.teichmuller_digits(c) for c in f.coeffs]
        return [
            Polynomial(self.field, [digits[i] for digits in columns])
            for i in range(self.l)
        ]

    def from_teichmuller_expansion(self, components):
        """Inverse of :meth:`teichmuller_expansion`"""
        degree = max((c.degree for c in components), default=-1)
        coefficients = [
            self.from_teichmuller_digits([c.coefficient(k) for c in components])
            for k in range(degree + 1)
        ]
        return Polynomial(self, coefficients)

    # traces and characters

    def absolute_trace(self, x):
        """Trace down to Z/p^l, as an integer in ``[0, p^l)``"""
        return sum(c * t for c, t in zip(x, self._basis_traces)) % self.characteristic

    def format(self, a):
        if self.m == 1:
            return str(a[0])
        return "[%s]" % ",".join(str(c) for c in a)


@functools.lru_cache(maxsize=None)
def galois_ring_over(field, l):
    """Cached GR(p^l, m) whose residue field is ``field``"""
    return GaloisRing(field.p, l, field.m, field)


def get_galois_ring(p, l, m):
    """GR(p^l, m) over the default residue field"""
    return galois_ring_over(get_field(p, m), l)


def extension_ring(ring, d):
    """GR(p^l, m d) over GR(p^l, m)"""
    return get_galois_ring(ring.p, ring.l, ring.m * d)


class GaloisRingEmbedding(object):
    """The embedding GR(p^l, m) -> GR(p^l, n) compatible with Teichmuller digits"""

    def __init__(self, small, large):
        if (small.p, small.l) != (large.p, large.l) or large.m % small.m != 0:
            raise ParameterError("%r is not a subring of %r" % (small, large))
        self.small = small
        self.large = large
        self.fields = get_embedding(small.field, large.field)

    def __call__(self, x):
        digits = self.small.teichmuller_digits(x)
        return self.large.from_teichmuller_digits([self.fields(b) for b in digits])

    def preimage(self, y):
        digits = self.large.teichmuller_digits(y)
        return self.small.from_teichmuller_digits([self.fields.preimage(b) for b in digits])


@functools.lru_cache(maxsize=None)
def get_ring_embedding(small, large):
    return GaloisRingEmbedding(small, large)


def gr_trace(x, source, target):
    """Relative trace from ``source`` = GR(p^l, m d) down to ``target`` = GR(p^l, m)"""
    if (source.p, source.l) != (target.p, target.l) or source.m % target.m != 0:
        raise ParameterError("%r is not an extension of %r" % (source, target))
    d = source.m // target.m
    total = source.zero
    conjugate = x
    for _ in range(d):
        total = source.add(total, conjugate)
        conjugate = source.ring_frobenius(conjugate, times=target.m)
    return get_ring_embedding(target, source).preimage(total)


class AdditiveCharacter(object):
    """The character ``psi_b(x) = zeta^{Tr(b x)}`` of GR(p^l, m)"""

    def __init__(self, ring, b=None):
        self.ring = ring
        self.b = ring.one if b is None else b

    def exponent(self, x):
        """Integer lift of the absolute trace of ``b x``"""
        return self.ring.absolute_trace(self.ring.mul(self.b, x))

    def __call__(self, x):
        return CyclotomicInteger.zeta_power(self.ring.p, self.ring.l, self.exponent(x))

    def extended(self, d):
        """``psi_b o Tr`` on GR(p^l, m d), given by the twist ``b`` embedded in the extension"""
        large = extension_ring(self.ring, d)
        return AdditiveCharacter(large, get_ring_embedding(self.ring, large)(self.b))

    def __repr__(self):
        return "AdditiveCharacter(%r, %s)" % (self.ring, self.ring.format(self.b))
