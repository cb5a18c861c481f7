"""Exact arithmetic in Z[zeta] for ``zeta`` a primitive ``p^l``-th root of unity.

Elements are stored reduced modulo the cyclotomic polynomial
``Phi(X) = sum_{i<p} X^{i p^{l-1}}``, as ``phi(p^l) = p^{l-1}(p-1)`` coefficients.
"""

import functools
import logging
from fractions import Fraction

import numpy

from ..exceptions import InternalConsistencyError, ParameterError

# logger for this file
logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _layout(p, l):
    n = p ** l
    step = p ** (l - 1)
    phi = n - step
    logger.debug("[cyclotomic|layout] Z[zeta_%d] stored on %d coefficients", n, phi)
    return n, step, phi


def _reduce(p, l, full):
    """Reduces a coefficient list indexed by exponents ``0..n-1``"""
    n, step, phi = _layout(p, l)
    coeffs = list(full[:phi])
    for k in range(phi, n):
        c = full[k]
        if c:
            for i in range(p - 1):
                coeffs[k - phi + i * step] -= c
    return coeffs


class CyclotomicNumber(object):
    """Common arithmetic of :class:`CyclotomicInteger` and :class:`CyclotomicRational`"""

    __slots__ = ("p", "l", "coeffs")

    def __init__(self, p, l, coeffs):
        n, step, phi = _layout(p, l)
        coeffs = list(coeffs)
        if len(coeffs) > phi:
            full = coeffs + [0] * (n - len(coeffs)) if len(coeffs) < n else coeffs
            folded = [0] * n
            for k, c in enumerate(full):
                folded[k % n] += c
            coeffs = _reduce(p, l, folded)
        else:
            coeffs = coeffs + [0] * (phi - len(coeffs))
        self.p = p
        self.l = l
        self.coeffs = tuple(self._normalize(c) for c in coeffs)

    @staticmethod
    def _normalize(c):
        return c

    @classmethod
    def zero(cls, p, l):
        return cls(p, l, ())

    @classmethod
    def one(cls, p, l):
        return cls(p, l, (1,))

    @classmethod
    def zeta_power(cls, p, l, k):
        """``zeta^k``"""
        n, _, _ = _layout(p, l)
        full = [0] * n
        full[k % n] = 1
        return cls(p, l, _reduce(p, l, full))

    @classmethod
    def from_exponent_counts(cls, p, l, counts):
        """``sum_k counts[k] zeta^k`` for ``counts`` indexed by ``k mod p^l``"""
        n, _, _ = _layout(p, l)
        full = [0] * n
        for k, c in enumerate(counts):
            full[k % n] += int(c)
        return cls(p, l, _reduce(p, l, full))

    @property
    def order(self):
        return self.p ** self.l

    def _check(self, other):
        if (self.p, self.l) != (other.p, other.l):
            raise ParameterError(
                "cyclotomic numbers of orders %d and %d" % (self.p ** self.l, other.p ** other.l)
            )

    def _result_class(self, other):
        if isinstance(self, CyclotomicRational) or isinstance(other, CyclotomicRational):
            return CyclotomicRational
        return CyclotomicInteger

    def _lift(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            cls = CyclotomicRational if isinstance(other, Fraction) else CyclotomicInteger
            return cls(self.p, self.l, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        cls = self._result_class(other)
        return cls(self.p, self.l, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.p, self.l, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            cls = CyclotomicRational if isinstance(other, Fraction) else type(self)
            return cls(self.p, self.l, [a * other for a in self.coeffs])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n, _, _ = _layout(self.p, self.l)
        full = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        full[(i + j) % n] += a * b
        cls = self._result_class(other)
        return cls(self.p, self.l, _reduce(self.p, self.l, full))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)) or other == 0:
            raise ParameterError("cyclotomic numbers can only be divided by nonzero rationals")
        return CyclotomicRational(self.p, self.l, [Fraction(a) / other for a in self.coeffs])

    def __pow__(self, n):
        if n < 0:
            raise ParameterError("negative power of a cyclotomic number")
        result = type(self).one(self.p, self.l)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, CyclotomicNumber) else other
        if other is NotImplemented:
            return other
        return (self.p, self.l) == (other.p, other.l) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.p, self.l, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def conjugate(self, k):
        """Image under the Galois automorphism ``zeta -> zeta^k``, ``k`` prime to ``p``"""
        if k % self.p == 0:
            raise ParameterError("%d is not prime to %d" % (k, self.p))
        n, _, _ = _layout(self.p, self.l)
        full = [0] * n
        for j, c in enumerate(self.coeffs):
            full[(j * k) % n] += c
        return type(self)(self.p, self.l, _reduce(self.p, self.l, full))

    def complex_conjugate(self):
        return self.conjugate(-1)

    def to_clongdouble(self):
        """Complex embedding ``zeta -> exp(2 i pi / p^l)`` in extended precision"""
        n = self.p ** self.l
        angles = numpy.arange(len(self.coeffs), dtype=numpy.longdouble) * (2 * numpy.pi / numpy.longdouble(n))
        roots = numpy.cos(angles) + 1j * numpy.sin(angles)
        values = numpy.array([float(c) if isinstance(c, Fraction) else c for c in self.coeffs], dtype=numpy.longdouble)
        return numpy.clongdouble(numpy.sum(values * roots.astype(numpy.clongdouble)))

    def to_complex(self):
        return complex(self.to_clongdouble())

    def abs_complex(self):
        """Modulus of the complex embedding"""
        return float(numpy.abs(self.to_clongdouble()))

    def coefficient_list(self):
        """JSON friendly coefficients"""
        return [c if isinstance(c, int) else str(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            monomial = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
            if not monomial:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            elif c == -1:
                terms.append("-" + monomial)
            else:
                terms.append("%s*%s" % (c, monomial))
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")

    def __repr__(self):
        return "%s(%d, %d, %r)" % (type(self).__name__, self.p, self.l, self.coeffs)


class CyclotomicInteger(CyclotomicNumber):
    """Element of Z[zeta_{p^l}]"""

    __slots__ = ()

    @staticmethod
    def _normalize(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise InternalConsistencyError("non integral coefficient %s" % c)
            return c.numerator
        return int(c)


class CyclotomicRational(CyclotomicNumber):
    """Element of Q(zeta_{p^l}), used by the Newton recursion"""

    __slots__ = ()

    @staticmethod
    def _normalize(c):
        return Fraction(c)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integer(self):
        """Exact conversion, :class:`InternalConsistencyError` when a denominator survives"""
        if not self.is_integral():
            raise InternalConsistencyError("%s is not an algebraic integer" % self)
        return CyclotomicInteger(self.p, self.l, [c.numerator for c in self.coeffs])
