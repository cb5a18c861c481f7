"""The rational function field F_q(x) of the projective line"""

import functools
import logging

from ..conf import check_enumeration
from ..exceptions import ParameterError, PoleEvaluationError
from ..rings.base import OperatorRing
from ..rings.finite_fields import get_embedding, get_field
from ..rings.polynomials import Polynomial, factor, gcd, irreducible_polynomials
from .places import FinitePlace, InfinitePlace
from .series import LaurentExpansion, LaurentSeries, evaluate_polynomial, fixed_point

# logger for this file
logger = logging.getLogger(__name__)

INFINITY = InfinitePlace()


class RationalFunction(object):
    """``num / den`` with coprime polynomials and a monic denominator"""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalized=False):
        field = num.ring
        if den is None:
            den = Polynomial.constant(field, field.one)
            normalized = True
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not normalized:
            if num.is_zero():
                den = Polynomial.constant(field, field.one)
            else:
                g = gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                if not den.is_monic():
                    inverse = field.inv(den.leading)
                    num = num.scale(inverse)
                    den = den.scale(inverse)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.ring

    @classmethod
    def constant(cls, field, c):
        return cls(Polynomial.constant(field, c))

    @classmethod
    def x(cls, field):
        return cls(Polynomial.x(field))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.is_polynomial() and self.num.degree <= 0

    def constant_value(self):
        return self.num.coefficient(0)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction.constant(self.field, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den, normalized=self.is_polynomial())
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_polynomial() and other.is_polynomial():
            return RationalFunction(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, normalized=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, self.den))

    def map_coefficients(self, fn, field):
        return RationalFunction(self.num.map_coefficients(fn, field), self.den.map_coefficients(fn, field))

    def evaluator(self, target, embed):
        """Returns ``a -> self(a)`` on ``target``, coefficients sent by ``embed``"""
        num = [embed(c) for c in reversed(self.num.coeffs)]
        den = [embed(c) for c in reversed(self.den.coeffs)]

        def horner(coeffs, a):
            value = 0
            for c in coeffs:
                value = target.add(target.mul(value, a), c)
            return value

        def evaluate(a):
            d = horner(den, a)
            if d == 0:
                raise PoleEvaluationError("%s has a pole at %d of %r" % (self, a, target))
            return target.div(horner(num, a), d)

        return evaluate

    def __call__(self, a):
        return self.evaluator(self.field, lambda c: c)(a)

    def __repr__(self):
        return "RationalFunction(%s)" % self

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)


def _multiplicity(poly, pi):
    """Order of ``pi`` in the nonzero polynomial ``poly``, with the cofactor"""
    count = 0
    while True:
        quotient, remainder = divmod(poly, pi)
        if not remainder.is_zero():
            return count, poly
        poly = quotient
        count += 1


class RationalFunctionField(OperatorRing):
    """The function field F_q(x) of P^1 over ``field``, genus 0"""

    genus = 0
    name = "P1"

    def __init__(self, field):
        self.field = field
        self.characteristic = field.p
        self._roots = {}
        self._residue_tables = {}

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.field == self.field

    def __hash__(self):
        return hash(("P1", self.field))

    def __repr__(self):
        return "%r(x)" % self.field

    # coefficient ring protocol

    def from_int(self, n):
        return RationalFunction.constant(self.field, self.field.from_int(n))

    def constant(self, c):
        return RationalFunction.constant(self.field, c)

    @property
    def x(self):
        return RationalFunction.x(self.field)

    def equal(self, a, b):
        return a == b

    def contains(self, a):
        return isinstance(a, RationalFunction) and a.field == self.field

    def format(self, a):
        return str(a)

    def coerce(self, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return RationalFunction(value)
        return self.from_int(value)

    # places

    def residue_field(self, place):
        if place.degree == 1:
            return self.field
        return get_field(self.field.p, self.field.m * place.degree)

    def expands_at(self, place):
        return True

    def residue_root(self, place):
        """The root ``theta`` of the place polynomial identifying its residue field"""
        try:
            return self._roots[place]
        except KeyError:
            pass
        residue = self.residue_field(place)
        embed = get_embedding(self.field, residue)
        pi = place.polynomial
        root = next(a for a in residue.elements() if pi.evaluate_in(residue, a, embed) == 0)
        self._roots[place] = root
        return root

    def _residue(self, poly, place):
        residue = self.residue_field(place)
        embed = get_embedding(self.field, residue)
        return poly.evaluate_in(residue, self.residue_root(place), embed)

    def _residue_table(self, place):
        try:
            return self._residue_tables[place]
        except KeyError:
            pass
        field = self.field
        check_enumeration("residue field of %s" % place, field.q ** place.degree)
        table = {}
        for k in range(field.q ** place.degree):
            coeffs = []
            for _ in range(place.degree):
                k, c = divmod(k, field.q)
                coeffs.append(c)
            poly = Polynomial(field, coeffs)
            table[self._residue(poly, place)] = poly
        self._residue_tables[place] = table
        return table

    def valuation(self, f, place):
        """Order of ``f`` at ``place``, ``None`` for the zero function"""
        if f.is_zero():
            return None
        if isinstance(place, InfinitePlace):
            return f.den.degree - f.num.degree
        pi = place.polynomial
        a, _ = _multiplicity(f.num, pi)
        b, _ = _multiplicity(f.den, pi)
        return a - b

    def leading_coefficient(self, f, place):
        """First coefficient of the expansion of ``f`` in the local parameter, in the residue field"""
        if f.is_zero():
            return 0
        field = self.field
        if isinstance(place, InfinitePlace):
            return field.div(f.num.leading, f.den.leading)
        pi = place.polynomial
        _, num = _multiplicity(f.num, pi)
        _, den = _multiplicity(f.den, pi)
        residue = self.residue_field(place)
        return residue.div(self._residue(num, place), self._residue(den, place))

    def value_at(self, f, place):
        """Residue of a function regular at ``place``"""
        v = self.valuation(f, place)
        if v is None or v > 0:
            return 0
        if v < 0:
            raise PoleEvaluationError("%s has a pole of order %d at %s" % (f, -v, place))
        return self.leading_coefficient(f, place)

    def monomial(self, place, s, c):
        """A function of valuation ``-s`` at ``place`` with leading coefficient ``c``"""
        field = self.field
        if isinstance(place, InfinitePlace):
            return RationalFunction(Polynomial.monomial(field, c, s))
        if place.degree == 1:
            lift = Polynomial.constant(field, c)
        else:
            lift = self._residue_table(place)[c]
        return RationalFunction(lift, place.polynomial ** s)

    def pole_divisor(self, f):
        """``{place: multiplicity}`` over the poles of ``f``, sorted by place"""
        if f.is_zero():
            return {}
        result = {}
        if f.den.degree > 0:
            for pi, e in factor(f.den)[1]:
                result[FinitePlace(pi)] = e
        if f.num.degree > f.den.degree:
            result[INFINITY] = f.num.degree - f.den.degree
        return dict(sorted(result.items()))

    def pole_places(self, f):
        return sorted(self.pole_divisor(f))

    def divisor(self, f):
        """Zeros and poles of the nonzero function ``f``"""
        if f.is_zero():
            raise ParameterError("divisor of the zero function")
        result = {}
        for sign, poly in ((1, f.num), (-1, f.den)):
            if poly.degree > 0:
                for pi, e in factor(poly)[1]:
                    result[FinitePlace(pi)] = sign * e
        if f.den.degree != f.num.degree:
            result[INFINITY] = f.den.degree - f.num.degree
        return dict(sorted(result.items()))

    def places_up_to_degree(self, dmax):
        places = [INFINITY]
        for d in range(1, dmax + 1):
            places.extend(FinitePlace(pi) for pi in irreducible_polynomials(self.field, d))
        return sorted(places)

    # points over extensions

    def extension(self, d):
        return self.field if d == 1 else get_field(self.field.p, self.field.m * d)

    def points_over_extension(self, d):
        """Affine points as elements of F_{q^d}, then the point at infinity"""
        ext = self.extension(d)
        check_enumeration("P1(%r)" % ext, ext.q + 1)
        return list(ext.elements()) + [INFINITY]

    def points_of_place(self, place, d):
        """The points of P^1(F_{q^d}) lying over ``place``"""
        if isinstance(place, InfinitePlace):
            return [INFINITY]
        if d % place.degree:
            return []
        ext = self.extension(d)
        residue = self.residue_field(place)
        embedding = get_embedding(residue, ext)
        points = []
        a = self.residue_root(place)
        for _ in range(place.degree):
            points.append(embedding(a))
            a = residue.pow(a, self.field.q)
        return points

    def place_of_point(self, point, d):
        if isinstance(point, InfinitePlace):
            return INFINITY
        ext = self.extension(d)
        embedding = get_embedding(self.field, ext)
        q = self.field.q
        conjugates = [point]
        while True:
            following = ext.pow(conjugates[-1], q)
            if following == point:
                break
            conjugates.append(following)
        minimal = Polynomial.constant(ext, 1)
        for a in conjugates:
            minimal = minimal * Polynomial(ext, [ext.neg(a), 1])
        return FinitePlace(minimal.map_coefficients(embedding.preimage, self.field))

    def point_evaluator(self, f, d):
        """Evaluation of ``f`` at affine points of F_{q^d}"""
        ext = self.extension(d)
        return f.evaluator(ext, get_embedding(self.field, ext))

    def constant_extension(self, d):
        """The rational function field over F_{q^d}"""
        return get_rational_function_field(self.extension(d))

    def base_change(self, f, target):
        """``f`` seen in the constant field extension ``target``"""
        return f.map_coefficients(get_embedding(self.field, target.field), target.field)

    def places_above(self, place, target):
        """The places of the constant field extension ``target`` lying over ``place``"""
        if isinstance(place, InfinitePlace):
            return [INFINITY]
        pi = place.polynomial.map_coefficients(get_embedding(self.field, target.field), target.field)
        return sorted(FinitePlace(irreducible) for irreducible, _ in factor(pi)[1])

    # Laurent expansions

    def laurent_at(self, f, place, precision):
        """Expansion of ``f`` at ``place`` with ``precision`` known terms"""
        field = self.field
        if f.is_zero():
            raise ParameterError("Laurent expansion of the zero function")
        if isinstance(place, InfinitePlace):
            # f = t^{deg den - deg num} rev(num)(t) / rev(den)(t) with t = 1/x
            v = f.den.degree - f.num.degree
            num = LaurentSeries(field, 0, list(reversed(f.num.coeffs)), precision)
            den = LaurentSeries(field, 0, list(reversed(f.den.coeffs)), precision)
            quotient = num / den
            series = LaurentSeries(field, v, quotient.coeffs, v + quotient.relative_precision())
            return LaurentExpansion(place, "1/x", series)

        residue = self.residue_field(place)
        embed = get_embedding(field, residue)
        a, _ = _multiplicity(f.num, place.polynomial)
        b, _ = _multiplicity(f.den, place.polynomial)
        working = precision + a + b + 1
        x = self._local_x(place, working)
        num = evaluate_polynomial(f.num, x, embed)
        den = evaluate_polynomial(f.den, x, embed)
        series = (num / den).truncate(a - b + precision)
        return LaurentExpansion(place, str(place.polynomial), series)

    def _local_x(self, place, precision):
        """``x = theta + xi(t)`` with ``pi(x) = t``"""
        residue = self.residue_field(place)
        embed = get_embedding(self.field, residue)
        theta = self.residue_root(place)
        shifted = place.polynomial.map_coefficients(embed, residue).compose(Polynomial(residue, [theta, 1]))
        c1 = shifted.coefficient(1)
        inverse = residue.inv(c1)
        t = LaurentSeries.monomial(residue, 1, 1, precision)
        higher = Polynomial(residue, [0, 0] + list(shifted.coeffs[2:]))

        def step(xi):
            return (t - evaluate_polynomial(higher, xi, lambda c: c)).scale(inverse)

        xi = fixed_point(step, t.scale(inverse), precision)
        return xi + LaurentSeries.constant(residue, theta, precision)


@functools.lru_cache(maxsize=None)
def get_rational_function_field(field):
    return RationalFunctionField(field)
