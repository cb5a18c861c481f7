"""Function fields of Weierstrass elliptic curves.

The curve is ``y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6``, written
``y^2 + H(x) y = F(x)``. Functions are ``u + v y`` with ``u, v`` in F_q(x).
"""

import functools
import logging
import math

from ..conf import check_enumeration, setting
from ..exceptions import (
    ParameterError,
    PoleEvaluationError,
    PrecisionExhaustedError,
    UnsupportedPlaceError,
)
from ..rings.base import OperatorRing
from ..rings.finite_fields import get_embedding, get_field
from ..rings.polynomials import Polynomial, factor
from .places import AffinePlace, OriginPlace
from .projective_line import RationalFunction, _multiplicity
from .series import LaurentExpansion, LaurentSeries, evaluate_polynomial, fixed_point

# logger for this file
logger = logging.getLogger(__name__)

ORIGIN = OriginPlace()


class EllipticCurveModel(object):
    """Long Weierstrass model over a finite field"""

    def __init__(self, field, a1=0, a2=0, a3=0, a4=0, a6=0):
        self.field = field
        self.coefficients = (a1, a2, a3, a4, a6)
        self.a1, self.a2, self.a3, self.a4, self.a6 = self.coefficients
        if self.discriminant() == 0:
            raise ParameterError("the Weierstrass model %s is singular" % self)
        self.H = Polynomial(field, [a3, a1])
        self.F = Polynomial(field, [a6, a4, a2, 1])

    def discriminant(self):
        k = self.field
        a1, a2, a3, a4, a6 = self.coefficients
        n = k.from_int
        b2 = k.add(k.mul(a1, a1), k.mul(n(4), a2))
        b4 = k.add(k.mul(n(2), a4), k.mul(a1, a3))
        b6 = k.add(k.mul(a3, a3), k.mul(n(4), a6))
        b8 = k.sub(
            k.add(k.add(k.mul(k.mul(a1, a1), a6), k.mul(n(4), k.mul(a2, a6))), k.mul(a2, k.mul(a3, a3))),
            k.add(k.mul(a1, k.mul(a3, a4)), k.mul(a4, a4))
        )
        terms = [
            k.neg(k.mul(k.mul(b2, b2), b8)),
            k.neg(k.mul(n(8), k.pow(b4, 3))),
            k.neg(k.mul(n(27), k.mul(b6, b6))),
            k.mul(n(9), k.mul(b2, k.mul(b4, b6))),
        ]
        total = 0
        for term in terms:
            total = k.add(total, term)
        return total

    def __eq__(self, other):
        return isinstance(other, EllipticCurveModel) and (self.field, self.coefficients) == (
            other.field, other.coefficients
        )

    def __hash__(self):
        return hash((self.field, self.coefficients))

    def equation(self, x, y, k=None):
        """``y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6`` evaluated in the field ``k``"""
        k = k or self.field
        embed = get_embedding(self.field, k)
        a1, a2, a3, a4, a6 = [embed(a) for a in self.coefficients]
        left = k.add(k.mul(y, y), k.mul(y, k.add(k.mul(a1, x), a3)))
        right = k.add(k.add(k.pow(x, 3), k.mul(a2, k.mul(x, x))), k.add(k.mul(a4, x), a6))
        return k.sub(left, right)

    def partial_y(self, x, y, k=None):
        k = k or self.field
        embed = get_embedding(self.field, k)
        return k.add(k.add(k.mul(k.from_int(2), y), k.mul(embed(self.a1), x)), embed(self.a3))

    def partial_x(self, x, y, k=None):
        k = k or self.field
        embed = get_embedding(self.field, k)
        a1, a2, a4 = embed(self.a1), embed(self.a2), embed(self.a4)
        value = k.mul(a1, y)
        value = k.sub(value, k.mul(k.from_int(3), k.mul(x, x)))
        value = k.sub(value, k.mul(k.from_int(2), k.mul(a2, x)))
        return k.sub(value, a4)

    def __str__(self):
        return "y^2+%d*x*y+%d*y=x^3+%d*x^2+%d*x+%d over %r" % (
            self.a1, self.a3, self.a2, self.a4, self.a6, self.field
        )


class EllipticFunction(object):
    """``u + v y`` in the function field of ``curve``"""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve, u, v=None):
        field = curve.field
        if v is None:
            v = RationalFunction.constant(field, 0)
        self.curve = curve
        self.u = u
        self.v = v

    @classmethod
    def constant(cls, curve, c):
        return cls(curve, RationalFunction.constant(curve.field, c))

    def _coerce(self, other):
        if isinstance(other, EllipticFunction):
            if other.curve != self.curve:
                raise ParameterError("functions on different curves")
            return other
        if isinstance(other, RationalFunction):
            return EllipticFunction(self.curve, other)
        if isinstance(other, int):
            return EllipticFunction.constant(self.curve, self.curve.field.from_int(other))
        return NotImplemented

    def is_zero(self):
        return self.u.is_zero() and self.v.is_zero()

    def is_constant(self):
        return self.v.is_zero() and self.u.is_constant()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return EllipticFunction(self.curve, self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return EllipticFunction(self.curve, -self.u, -self.v)

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
        H = RationalFunction(self.curve.H)
        F = RationalFunction(self.curve.F)
        if self.v.is_zero():
            return EllipticFunction(self.curve, self.u * other.u, self.u * other.v)
        if other.v.is_zero():
            return EllipticFunction(self.curve, self.u * other.u, self.v * other.u)
        vv = self.v * other.v
        # y^2 = F - H y
        return EllipticFunction(
            self.curve,
            self.u * other.u + vv * F,
            self.u * other.v + self.v * other.u - vv * H
        )

    __rmul__ = __mul__

    def conjugate(self):
        """Image under ``y -> -y - H``"""
        H = RationalFunction(self.curve.H)
        return EllipticFunction(self.curve, self.u - self.v * H, -self.v)

    def norm(self):
        """``u^2 - u v H - v^2 F`` in F_q(x)"""
        H = RationalFunction(self.curve.H)
        F = RationalFunction(self.curve.F)
        return self.u * self.u - self.u * self.v * H - self.v * self.v * F

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        if self.v.is_zero():
            return EllipticFunction(self.curve, self.u.inverse())
        n = self.norm().inverse()
        conjugate = self.conjugate()
        return EllipticFunction(self.curve, conjugate.u * n, conjugate.v * n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if self.v.is_zero():
            return EllipticFunction(self.curve, self.u ** n)
        result = EllipticFunction.constant(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.u == other.u and self.v == other.v

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.u, self.v))

    def map_coefficients(self, fn, curve):
        field = curve.field
        return EllipticFunction(curve, self.u.map_coefficients(fn, field), self.v.map_coefficients(fn, field))

    def __repr__(self):
        return "EllipticFunction(%s)" % self

    def __str__(self):
        if self.v.is_zero():
            return str(self.u)
        v = "y" if self.v == 1 else "(%s)*y" % self.v
        if self.u.is_zero():
            return v
        return "%s+%s" % (self.u if self.u.is_polynomial() else "(%s)" % self.u, v)


class EllipticFunctionField(OperatorRing):
    """Function field of a Weierstrass model, genus 1"""

    genus = 1
    name = "E"

    def __init__(self, curve):
        self.curve = curve
        self.field = curve.field
        self.characteristic = curve.field.p
        self._points = {}

    def __eq__(self, other):
        return isinstance(other, EllipticFunctionField) and other.curve == self.curve

    def __hash__(self):
        return hash(("E", self.curve))

    def __repr__(self):
        return "K(%s)" % self.curve

    # coefficient ring protocol

    def from_int(self, n):
        return EllipticFunction.constant(self.curve, self.field.from_int(n))

    def constant(self, c):
        return EllipticFunction.constant(self.curve, c)

    @property
    def x(self):
        return EllipticFunction(self.curve, RationalFunction.x(self.field))

    @property
    def y(self):
        one = RationalFunction.constant(self.field, 1)
        return EllipticFunction(self.curve, RationalFunction.constant(self.field, 0), one)

    def equal(self, a, b):
        return a == b

    def contains(self, a):
        return isinstance(a, EllipticFunction) and a.curve == self.curve

    def format(self, a):
        return str(a)

    def coerce(self, value):
        if isinstance(value, EllipticFunction):
            return value
        if isinstance(value, RationalFunction):
            return EllipticFunction(self.curve, value)
        return self.from_int(value)

    # valuations

    def residue_field(self, place):
        if place.degree == 1:
            return self.field
        return get_field(self.field.p, self.field.m * place.degree)

    def _origin_parts(self, f):
        parts = []
        if not f.u.is_zero():
            parts.append((-2 * (f.u.num.degree - f.u.den.degree), f.u))
        if not f.v.is_zero():
            parts.append((-2 * (f.v.num.degree - f.v.den.degree) - 3, f.v))
        return parts

    def _local_parameter(self, place):
        x0, y0 = place.point
        if self.curve.partial_y(x0, y0) != 0:
            return "x", self.x - self.constant(x0)
        return "y", self.y - self.constant(y0)

    def _ramification(self, place):
        """Ramification index of the place over the x-line"""
        x0, y0 = place.point
        return 2 if self.curve.partial_y(x0, y0, place.field) == 0 else 1

    def _x_polynomial(self, place):
        """Minimal polynomial over the base field of the x-coordinate of ``place``"""
        field = self.field
        ext = place.field
        x0 = place.point[0]
        conjugates = [x0]
        while True:
            following = ext.pow(conjugates[-1], field.q)
            if following == x0:
                break
            conjugates.append(following)
        minimal = Polynomial.constant(ext, 1)
        for a in conjugates:
            minimal = minimal * Polynomial(ext, [ext.neg(a), 1])
        return minimal.map_coefficients(get_embedding(field, ext).preimage, field)

    def expands_at(self, place):
        """Whether Laurent expansions, leading coefficients and monomials exist at ``place``"""
        return isinstance(place, OriginPlace) or place.degree == 1

    def rational_model(self, f, place):
        """``f`` over the residue field of ``place`` with a rational place above it.

        The constant field extension is unramified, so valuations and reduced
        pole orders at the place above agree with those at ``place``.
        """
        target, above = self.rational_place(place)
        return target, self.base_change(f, target), above

    def rational_place(self, place):
        """The constant extension of degree ``deg P`` and a rational place above ``place``"""
        target = self.constant_extension(place.degree)
        return target, self.places_above(place, target)[0]

    def valuation(self, f, place):
        """Order of ``f`` at ``place``, ``None`` for the zero function"""
        if f.is_zero():
            return None
        if isinstance(place, OriginPlace):
            return min(v for v, _ in self._origin_parts(f))
        if f.v.is_zero():
            pi = self._x_polynomial(place)
            a, _ = _multiplicity(f.u.num, pi)
            b, _ = _multiplicity(f.u.den, pi)
            return self._ramification(place) * (a - b)
        if place.degree > 1:
            target, g, above = self.rational_model(f, place)
            return target.valuation(g, above)
        return self._affine_expansion(f, place, 1).valuation

    def leading_coefficient(self, f, place):
        if f.is_zero():
            return 0
        if isinstance(place, OriginPlace):
            _, dominant = min(self._origin_parts(f), key=lambda item: item[0])
            return self.field.div(dominant.num.leading, dominant.den.leading)
        return self._affine_expansion(f, place, 1).leading

    def value_at(self, f, place):
        v = self.valuation(f, place)
        if v is None or v > 0:
            return 0
        if v < 0:
            raise PoleEvaluationError("%s has a pole of order %d at %s" % (f, -v, place))
        if not self.expands_at(place):
            target, g, above = self.rational_model(f, place)
            return target.value_at(g, above)
        return self.leading_coefficient(f, place)

    def monomial(self, place, s, c):
        """A function of valuation ``-s`` at ``place`` with leading coefficient ``c``"""
        if isinstance(place, OriginPlace):
            if s % 2 == 0:
                h = self.x ** (s // 2)
            elif s >= 3:
                h = self.x ** ((s - 3) // 2) * self.y
            else:
                h = self.y / self.x
            return h * self.constant(c)
        self._require_rational(place)
        _, t = self._local_parameter(place)
        return self.constant(c) / t ** s

    def _require_rational(self, place):
        if place.degree != 1:
            raise UnsupportedPlaceError("affine place %s of degree %d on %s" % (place, place.degree, self.curve))

    def pole_divisor(self, f):
        result = {}
        v = self.valuation(f, ORIGIN) if not f.is_zero() else None
        if v is not None and v < 0:
            result[ORIGIN] = -v
        for place in self._affine_candidates(f):
            v = self.valuation(f, place)
            if v is not None and v < 0:
                result[place] = -v
        return dict(sorted(result.items()))

    def pole_places(self, f):
        return sorted(self.pole_divisor(f))

    def _affine_candidates(self, f):
        denominators = [f.u.den, f.v.den]
        primes = set()
        for den in denominators:
            if den.degree > 0:
                primes.update(pi for pi, _ in factor(den)[1])
        places = set()
        for pi in sorted(primes):
            places.update(self.places_over(pi))
        return sorted(places)

    def places_over(self, pi):
        """Places whose x-coordinate is a root of the irreducible ``pi``"""
        field = self.field
        result = set()
        e = pi.degree
        for d in (e, 2 * e):
            ext = self.extension(d)
            embed = get_embedding(field, ext)
            for x0 in ext.elements():
                if pi.evaluate_in(ext, x0, embed) != 0:
                    continue
                for y0 in self._y_values(x0, ext):
                    place = self.place_of_point((x0, y0), d)
                    if place.degree == d or d == e:
                        result.add(place)
        return result

    def affine_divisor_degree(self, f):
        """Degree of the affine part of the divisor of ``f``, read on its norm"""
        n = f.norm()
        return n.num.degree - n.den.degree

    def divisor_degree(self, f):
        """``sum v_P(f) deg P``, zero for every nonzero function"""
        return self.valuation(f, ORIGIN) + self.affine_divisor_degree(f)

    # Laurent expansions

    def laurent_at(self, f, place, precision):
        if f.is_zero():
            raise ParameterError("Laurent expansion of the zero function")
        if isinstance(place, OriginPlace):
            return self._expand(f, place, precision, self._origin_xy, "x/y")
        self._require_rational(place)
        return self._affine_expansion(f, place, precision)

    def _affine_expansion(self, f, place, precision):
        self._require_rational(place)
        name, _ = self._local_parameter(place)
        x0, y0 = place.point
        parameter = "x-%d" % x0 if name == "x" else "y-%d" % y0
        return self._expand(f, place, precision, self._affine_xy, parameter)

    def _expand(self, f, place, precision, local_xy, parameter):
        cap = setting("WITTSUM_LAURENT_MAX_PRECISION")
        working = max(2 * precision + 8, 16)
        while working <= cap:
            x, y = local_xy(place, working)
            try:
                series = self._substitute(f, x, y)
            except ZeroDivisionError:
                series = None
            if series is not None and series.valuation is not None and series.relative_precision() >= precision:
                series = series.truncate(series.start + precision)
                return LaurentExpansion(place, parameter, series)
            working *= 2
            logger.debug("[elliptic|laurent] doubling precision to %d at %s", working, place)
        raise PrecisionExhaustedError(place, working // 2)

    def _substitute(self, f, x, y):
        identity = self._identity
        u = evaluate_polynomial(f.u.num, x, identity) / evaluate_polynomial(f.u.den, x, identity)
        if f.v.is_zero():
            return u
        v = evaluate_polynomial(f.v.num, x, identity) / evaluate_polynomial(f.v.den, x, identity)
        return u + v * y

    @staticmethod
    def _identity(c):
        return c

    @functools.lru_cache(maxsize=None)
    def _origin_xy(self, place, precision):
        """``x = z/w``, ``y = -1/w`` with ``z = -x/y`` then substituted ``z = -t``"""
        k = self.field
        a1, a2, a3, a4, a6 = self.curve.coefficients
        z = LaurentSeries.monomial(k, k.neg(1), 1, precision)

        def step(w):
            return (
                z ** 3 + (z * w).scale(a1) + (z * z * w).scale(a2) + (w * w).scale(a3)
                + (z * w * w).scale(a4) + (w * w * w).scale(a6)
            )

        w = fixed_point(step, z ** 3, precision)
        inverse = w.inverse()
        return z * inverse, -inverse

    @functools.lru_cache(maxsize=None)
    def _affine_xy(self, place, precision):
        k = self.field
        curve = self.curve
        a1, a2, a3, a4, a6 = curve.coefficients
        x0, y0 = place.point
        t = LaurentSeries.monomial(k, 1, 1, precision)

        def constant(c):
            return LaurentSeries.constant(k, c, precision)

        def relation(x, y):
            return (
                y * y + (x * y).scale(a1) + y.scale(a3)
                - x * x * x - (x * x).scale(a2) - x.scale(a4) - constant(a6)
            )

        if curve.partial_y(x0, y0) != 0:
            x = constant(x0) + t
            derivative = constant(curve.partial_y(x0, y0)) + t.scale(a1)
            inverse = derivative.inverse()

            def step(eta):
                # G(x, y0 + eta) = G(x, y0) + G_y(x, y0) eta + eta^2
                return eta - relation(x, constant(y0) + eta) * inverse

            eta = fixed_point(step, constant(0), precision)
            return x, constant(y0) + eta

        y = constant(y0) + t
        inverse = constant(curve.partial_x(x0, y0)).inverse()

        def step(xi):
            return xi - relation(constant(x0) + xi, y) * inverse

        xi = fixed_point(step, constant(0), precision)
        return constant(x0) + xi, y

    # points

    def extension(self, d):
        return self.field if d == 1 else get_field(self.field.p, self.field.m * d)

    def _y_values(self, x0, ext):
        """The ``y`` with ``(x0, y)`` on the curve, ``x0`` in ``ext``"""
        return self._root_tables(ext)(x0)

    @functools.lru_cache(maxsize=None)
    def _root_tables(self, ext):
        curve = self.curve
        embed = get_embedding(self.field, ext)
        H = curve.H.map_coefficients(embed, ext)
        F = curve.F.map_coefficients(embed, ext)
        if ext.p == 2:
            # y = H z turns y^2 + H y = F into z^2 + z = F / H^2
            solutions = {}
            for z in ext.elements():
                solutions.setdefault(ext.add(ext.mul(z, z), z), []).append(z)

            def roots(x0):
                h, f = H(x0), F(x0)
                if h == 0:
                    return [ext.pth_root(f)]
                c = ext.div(f, ext.mul(h, h))
                return sorted(ext.mul(h, z) for z in solutions.get(c, []))

            return roots

        square_roots = {}
        for r in ext.elements():
            square_roots.setdefault(ext.mul(r, r), []).append(r)
        half = ext.inv(ext.from_int(2))
        quarter = ext.mul(half, half)

        def roots(x0):
            # (y + H/2)^2 = F + H^2/4
            h, f = H(x0), F(x0)
            shift = ext.mul(h, half)
            target = ext.add(f, ext.mul(ext.mul(h, h), quarter))
            return sorted(ext.sub(r, shift) for r in square_roots.get(target, []))

        return roots

    def points_over_extension(self, d):
        """Affine points as pairs over F_{q^d} followed by ``O``"""
        if d in self._points:
            return self._points[d]
        ext = self.extension(d)
        check_enumeration("E(%r)" % ext, ext.q)
        points = []
        for x0 in ext.elements():
            points.extend((x0, y0) for y0 in self._y_values(x0, ext))
        points.append(ORIGIN)
        self._points[d] = points
        logger.debug("[elliptic|points] #E(%r) = %d", ext, len(points))
        return points

    def count_points(self, d=1):
        return len(self.points_over_extension(d))

    def count_points_recursive(self, d):
        """``#E(F_{q^d})`` from ``#E(F_q)`` through the Frobenius trace recursion"""
        q = self.field.q
        a = q + 1 - self.count_points(1)
        s_previous, s = 2, a
        for _ in range(d - 1):
            s_previous, s = s, a * s - q * s_previous
        return q ** d + 1 - s

    def place_of_point(self, point, d):
        if isinstance(point, OriginPlace):
            return ORIGIN
        ext = self.extension(d)
        q = self.field.q
        orbit = [point]
        while True:
            following = (ext.pow(orbit[-1][0], q), ext.pow(orbit[-1][1], q))
            if following == point:
                break
            orbit.append(following)
        e = len(orbit)
        small = self.extension(e)
        embedding = get_embedding(small, ext)
        return AffinePlace([(embedding.preimage(a), embedding.preimage(b)) for a, b in orbit], small)

    def points_of_place(self, place, d):
        if isinstance(place, OriginPlace):
            return [ORIGIN]
        if d % place.degree:
            return []
        embedding = get_embedding(place.field, self.extension(d))
        return [(embedding(a), embedding(b)) for a, b in place.points]

    def places_up_to_degree(self, dmax):
        places = {ORIGIN}
        for d in range(1, dmax + 1):
            for point in self.points_over_extension(d):
                if not isinstance(point, OriginPlace):
                    place = self.place_of_point(point, d)
                    if place.degree == d:
                        places.add(place)
        return sorted(places)

    def point_evaluator(self, f, d):
        ext = self.extension(d)
        embed = get_embedding(self.field, ext)
        u = f.u.evaluator(ext, embed)
        if f.v.is_zero():
            return lambda point: u(point[0])
        v = f.v.evaluator(ext, embed)
        return lambda point: ext.add(u(point[0]), ext.mul(v(point[0]), point[1]))

    def constant_extension(self, d):
        ext = self.extension(d)
        embed = get_embedding(self.field, ext)
        curve = EllipticCurveModel(ext, *[embed(a) for a in self.curve.coefficients])
        return get_elliptic_function_field(curve)

    def base_change(self, f, target):
        return f.map_coefficients(get_embedding(self.field, target.field), target.curve)

    def places_above(self, place, target):
        if isinstance(place, OriginPlace):
            return [ORIGIN]
        d = target.field.m // self.field.m
        k = place.degree // math.gcd(place.degree, d)
        embedding = get_embedding(place.field, target.extension(k))
        return sorted({target.place_of_point((embedding(a), embedding(b)), k) for a, b in place.points})


@functools.lru_cache(maxsize=None)
def get_elliptic_function_field(curve):
    return EllipticFunctionField(curve)
