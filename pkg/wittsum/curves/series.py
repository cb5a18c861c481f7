"""Truncated Laurent series over a finite field.

A series is ``sum_k coeffs[k] t^{start+k} + O(t^precision)``: ``precision`` is
absolute. Series are normalized so that the first stored coefficient is
nonzero; a series without known nonzero coefficient has ``start == precision``.
"""

import logging

from ..exceptions import ParameterError

# logger for this file
logger = logging.getLogger(__name__)


class LaurentSeries(object):

    __slots__ = ("field", "start", "coeffs", "precision")

    def __init__(self, field, start, coeffs, precision):
        coeffs = list(coeffs[:max(precision - start, 0)])
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        coeffs = coeffs[k:]
        start += k
        if not coeffs:
            start = precision
        self.field = field
        self.start = start
        self.coeffs = tuple(coeffs)
        self.precision = precision

    @classmethod
    def constant(cls, field, c, precision):
        return cls(field, 0, [c], precision)

    @classmethod
    def monomial(cls, field, c, n, precision):
        return cls(field, n, [c], precision)

    @property
    def valuation(self):
        """Valuation, ``None`` when no nonzero coefficient is known"""
        if not self.coeffs:
            return None
        return self.start

    @property
    def leading(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_known_zero(self):
        return not self.coeffs

    def coefficient(self, n):
        if n >= self.precision:
            raise ParameterError("coefficient of t^%d beyond the precision %d" % (n, self.precision))
        k = n - self.start
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def relative_precision(self):
        return self.precision - self.start

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, int):
            return LaurentSeries.constant(self.field, self.field.from_int(other), self.precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        precision = min(self.precision, other.precision)
        start = min(self.start, other.start)
        coeffs = [
            field.add(self.coefficient(n), other.coefficient(n))
            for n in range(start, precision)
        ]
        return LaurentSeries(field, start, coeffs, precision)

    __radd__ = __add__

    def __neg__(self):
        field = self.field
        return LaurentSeries(field, self.start, [field.neg(c) for c in self.coeffs], self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        field = self.field
        start = self.start + other.start
        precision = min(self.precision + other.start, other.precision + self.start)
        n = precision - start
        coeffs = [0] * max(n, 0)
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[:n - i]):
                if b:
                    coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b))
        return LaurentSeries(field, start, coeffs, precision)

    __rmul__ = __mul__

    def scale(self, c):
        field = self.field
        return LaurentSeries(field, self.start, [field.mul(c, a) for a in self.coeffs], self.precision)

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a series without known nonzero coefficient")
        field = self.field
        a = self.coeffs
        r = self.precision - self.start
        inv0 = field.inv(a[0])
        b = [inv0]
        for k in range(1, r):
            total = 0
            for j in range(1, min(k, len(a) - 1) + 1):
                if a[j]:
                    total = field.add(total, field.mul(a[j], b[k - j]))
            b.append(field.neg(field.mul(inv0, total)))
        return LaurentSeries(field, -self.start, b, -self.start + r)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries.constant(self.field, 1, self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def truncate(self, precision):
        return LaurentSeries(self.field, self.start, self.coeffs, min(precision, self.precision))

    def agrees_with(self, other, precision):
        """Equality of the coefficients below the absolute order ``precision``"""
        start = min(self.start, other.start)
        end = min(precision, self.precision, other.precision)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(start, end))

    def __repr__(self):
        return "LaurentSeries(start=%d, coeffs=%r, precision=%d)" % (self.start, self.coeffs, self.precision)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                n = self.start + k
                monomial = "1" if n == 0 else ("t" if n == 1 else "t^%d" % n)
                terms.append(monomial if c == 1 else "%d*%s" % (c, monomial))
        terms.append("O(t^%d)" % self.precision)
        return " + ".join(terms)


def evaluate_polynomial(poly, value, embed):
    """Horner evaluation of a polynomial over the base field at a series"""
    field, precision = value.field, value.precision
    result = LaurentSeries.constant(field, 0, precision)
    for c in reversed(poly.coeffs):
        result = result * value + LaurentSeries.constant(field, embed(c), precision)
    return result


class LaurentExpansion(object):
    """Expansion of a function at a place in a named local parameter"""

    def __init__(self, place, parameter, series):
        self.place = place
        self.parameter = parameter
        self.series = series

    @property
    def valuation(self):
        return self.series.valuation

    @property
    def leading(self):
        return self.series.leading

    @property
    def coefficients(self):
        return list(self.series.coeffs)

    @property
    def precision(self):
        """Number of known terms from the leading one on"""
        return self.series.relative_precision()

    def __str__(self):
        return "%s at %s in %s" % (self.series, self.place, self.parameter)


def fixed_point(step, initial, precision, max_iterations=None):
    """Iterates ``step`` from ``initial`` until two iterates agree below ``precision``"""
    current = initial
    iterations = max_iterations or precision + 2
    for _ in range(iterations):
        following = step(current)
        if following.agrees_with(current, precision):
            return following
        current = following
    logger.debug("[series|fixed_point] no agreement below %d after %d iterations", precision, iterations)
    return current
