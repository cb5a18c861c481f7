import math

from django.test import SimpleTestCase

from ..curves.elliptic import ORIGIN, EllipticCurveModel
from ..exceptions import ParameterError
from ..rings.finite_fields import get_field
from .tests import ordinary_curve, supersingular_curve


class WeierstrassModelTest(SimpleTestCase):

    def test_singular_model(self):
        """y^2 = x^3 is a cusp"""
        with self.assertRaises(ParameterError):
            EllipticCurveModel(get_field(3, 1))

    def test_equation(self):
        curve = supersingular_curve().curve
        self.assertEqual(curve.equation(0, 1), 0)
        self.assertNotEqual(curve.equation(1, 0), 0)


class EllipticPointsTest(SimpleTestCase):
    """Points of y^2 + y = x^3 over F_2 and of y^2 = x^3 + x^2 + 1 over F_3"""

    def setUp(self):
        self.field = supersingular_curve()
        self.ordinary = ordinary_curve()

    def test_rational_points(self):
        self.assertEqual(self.field.points_over_extension(1), [(0, 0), (0, 1), ORIGIN])
        self.assertEqual(self.field.count_points(1), 3)
        self.assertEqual(self.ordinary.count_points(1), 6)

    def test_hasse_bound(self):
        for field in (self.field, self.ordinary):
            q = field.field.q
            for d in (1, 2, 3):
                count = field.count_points(d)
                self.assertLessEqual(abs(count - q ** d - 1), 2 * math.sqrt(q ** d))
                self.assertEqual(count, field.count_points_recursive(d))

    def test_places(self):
        """3 places of degree 1 and 3 of degree 2: #E(F_4) = 9"""
        places = self.field.places_up_to_degree(2)
        self.assertEqual([place.degree for place in places], [1, 1, 1, 2, 2, 2])
        self.assertEqual(places[0], ORIGIN)

    def test_points_of_place(self):
        for place in self.field.places_up_to_degree(2):
            points = self.field.points_of_place(place, 2)
            self.assertEqual(len(points), place.degree)
            for point in points:
                self.assertEqual(self.field.place_of_point(point, 2), place)

    def test_places_above(self):
        """Places over F_2 split into places of the curve over F_4"""
        target = self.field.constant_extension(2)
        for place in self.field.places_up_to_degree(2):
            above = self.field.places_above(place, target)
            self.assertEqual(sum(p.degree for p in above), place.degree)
            self.assertTrue(all(p.degree == 1 for p in above))
        self.assertEqual(target.count_points(1), self.field.count_points(2))


class EllipticValuationTest(SimpleTestCase):

    def setUp(self):
        self.field = supersingular_curve()

    def test_valuations_at_origin(self):
        self.assertEqual(self.field.valuation(self.field.x, ORIGIN), -2)
        self.assertEqual(self.field.valuation(self.field.y, ORIGIN), -3)
        self.assertEqual(self.field.valuation(self.field.x * self.field.y, ORIGIN), -5)

    def test_pole_divisor(self):
        self.assertEqual(self.field.pole_divisor(self.field.x), {ORIGIN: 2})
        self.assertEqual(self.field.pole_divisor(self.field.from_int(1)), {})

    def test_principal_divisors_have_degree_zero(self):
        x, y = self.field.x, self.field.y
        for f in (x, y, x * y + 1, y / x):
            self.assertEqual(self.field.divisor_degree(f), 0)

    def test_laurent_expansion_at_origin(self):
        """x = t^-2 + t + ... in t = x/y, from w = t^3 + w^2 with w = 1/y"""
        expansion = self.field.laurent_at(self.field.x, ORIGIN, 4)
        self.assertEqual(expansion.valuation, -2)
        self.assertEqual(expansion.leading, 1)
        self.assertEqual([expansion.series.coefficient(n) for n in range(-2, 2)], [1, 0, 0, 1])

    def test_reexpansion_agrees(self):
        x, y = self.field.x, self.field.y
        places = [ORIGIN, self.field.place_of_point((0, 0), 1), self.field.place_of_point((0, 1), 1)]
        for f in (x, y, x * y + 1, y / x, (y + 1) / (x * x)):
            for place in places:
                short = self.field.laurent_at(f, place, 3)
                long = self.field.laurent_at(f, place, 8)
                self.assertEqual(long.valuation, short.valuation)
                terms = range(short.valuation, short.valuation + 3)
                self.assertEqual(
                    [long.series.coefficient(n) for n in terms], [short.series.coefficient(n) for n in terms],
                    "%s at %s" % (f, place),
                )

    def test_affine_place(self):
        """x is a local parameter at (0, 0), where y = x^3 + ..."""
        place = self.field.place_of_point((0, 0), 1)
        self.assertEqual(self.field.valuation(self.field.x, place), 1)
        self.assertEqual(self.field.valuation(self.field.y, place), 3)
        self.assertEqual(self.field.pole_divisor(1 / self.field.x), {
            place: 1, self.field.place_of_point((0, 1), 1): 1,
        })

    def test_monomials_at_origin(self):
        for s in (2, 3, 4, 5, 7):
            h = self.field.monomial(ORIGIN, s, 1)
            self.assertEqual(self.field.valuation(h, ORIGIN), -s)
            self.assertEqual(self.field.leading_coefficient(h, ORIGIN), 1)

    def test_function_arithmetic(self):
        x, y = self.field.x, self.field.y
        # y^2 = x^3 + y in characteristic 2
        self.assertEqual(y * y, x ** 3 + y)
        self.assertEqual((x * y) / y, x)

    def test_places_of_degree_two(self):
        """y / (x^2 + x + 1) has simple poles at the two places of degree 2 over x^2 + x + 1"""
        x, y = self.field.x, self.field.y
        f = y / (x * x + x + 1)
        poles = self.field.pole_divisor(f)
        self.assertEqual(list(poles.values()), [1, 1])
        self.assertEqual([place.degree for place in poles], [2, 2])
        for place in poles:
            self.assertEqual(self.field.valuation(f, place), -1)
            self.assertEqual(self.field.valuation(y, place), 0)
            self.assertEqual(self.field.valuation(y * (x * x + x + 1), place), 1)
            self.assertNotEqual(self.field.value_at(y, place), 0)
        self.assertEqual(self.field.valuation(f, ORIGIN), 1)
        self.assertEqual(self.field.divisor_degree(f), 0)
