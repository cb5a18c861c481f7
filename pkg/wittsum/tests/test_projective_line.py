from django.test import SimpleTestCase

from ..curves.places import FinitePlace
from ..curves.projective_line import INFINITY, RationalFunction
from ..exceptions import ParameterError, PoleEvaluationError
from ..rings.polynomials import Polynomial
from .tests import inverse_power, projective_line


class RationalFunctionFieldTest(SimpleTestCase):
    """Valuations, expansions and points of F_q(x)"""

    def setUp(self):
        self.f2 = projective_line(2)
        self.f3 = projective_line(3)

    def place(self, field, *coeffs):
        return FinitePlace(Polynomial(field.field, coeffs))

    def test_normalisation(self):
        x = self.f3.x
        f = (x * x - 1) / (x - 1)
        self.assertTrue(f.is_polynomial())
        self.assertEqual(f, x + 1)
        self.assertEqual(RationalFunction(Polynomial(self.f3.field, [2]), Polynomial(self.f3.field, [0, 2])),
                         inverse_power(self.f3, 1))

    def test_valuations(self):
        x = self.f3.x
        self.assertEqual(self.f3.valuation((x * x + 1) / x, self.place(self.f3, 0, 1)), -1)
        self.assertEqual(self.f3.valuation(x ** 3, INFINITY), -3)
        self.assertEqual(self.f3.valuation(x * x + 1, self.place(self.f3, 1, 0, 1)), 1)
        self.assertIsNone(self.f3.valuation(self.f3.from_int(0), INFINITY))

    def test_laurent_expansion_at_infinity(self):
        expansion = self.f3.laurent_at(self.f3.x ** 3, INFINITY, 3)
        self.assertEqual(expansion.valuation, -3)
        self.assertEqual(expansion.leading, 1)

    def test_geometric_series(self):
        """1/(x^2+x) = x^-1 + 1 + x + ... at (x) over F_2"""
        x = self.f2.x
        expansion = self.f2.laurent_at(1 / (x * x + x), self.place(self.f2, 0, 1), 4)
        self.assertEqual(expansion.valuation, -1)
        self.assertEqual(expansion.coefficients, [1, 1, 1, 1])

    def test_expansion_at_a_place_of_degree_two(self):
        """x^2+x+1 is a local parameter at its own place"""
        x = self.f2.x
        place = self.place(self.f2, 1, 1, 1)
        expansion = self.f2.laurent_at(1 / (x * x + x + 1) ** 2, place, 3)
        self.assertEqual(expansion.valuation, -2)
        self.assertEqual(expansion.leading, 1)

    def test_reexpansion_agrees(self):
        x = self.f3.x
        f = (x ** 4 + 1) / (x ** 3 + x * x + x)
        for place in (self.place(self.f3, 0, 1), self.place(self.f3, 2, 1), self.place(self.f3, 1, 0, 1), INFINITY):
            short = self.f3.laurent_at(f, place, 4)
            long = self.f3.laurent_at(f, place, 10)
            self.assertEqual(long.valuation, short.valuation)
            terms = range(short.valuation, short.valuation + 4)
            self.assertEqual(
                [long.series.coefficient(n) for n in terms], [short.series.coefficient(n) for n in terms], str(place)
            )

    def test_places(self):
        places = self.f2.places_up_to_degree(2)
        self.assertEqual(len(places), 4)
        self.assertEqual([place.degree for place in places], [1, 1, 1, 2])
        self.assertIn(INFINITY, places)

    def test_points(self):
        for d in (1, 2, 3):
            self.assertEqual(len(self.f2.points_over_extension(d)), 2 ** d + 1)
        self.assertEqual(len(self.f3.points_over_extension(1)), 4)

    def test_pole_divisor(self):
        x = self.f3.x
        self.assertEqual(self.f3.pole_divisor(x ** 3), {INFINITY: 3})
        self.assertEqual(self.f3.pole_divisor(1 / (x * x + 1)), {self.place(self.f3, 1, 0, 1): 1})
        self.assertEqual(self.f3.pole_divisor(self.f3.from_int(0)), {})
        with self.assertRaises(ParameterError):
            self.f3.divisor(self.f3.from_int(0))

    def test_pole_divisor_of_large_degree(self):
        """Only the denominator is factored"""
        x = self.f3.x
        self.assertEqual(self.f3.pole_divisor(x ** 40 + x + 2), {INFINITY: 40})
        poles = self.f3.pole_divisor(x ** 41 / (x ** 30 + x + 2))
        self.assertEqual(poles.pop(INFINITY), 11)
        self.assertEqual(sum(place.degree * e for place, e in poles.items()), 30)

    def test_points_and_places(self):
        """A place of degree 2 has two conjugate points over F_4"""
        place = self.place(self.f2, 1, 1, 1)
        points = self.f2.points_of_place(place, 2)
        self.assertEqual(len(points), 2)
        for point in points:
            self.assertEqual(self.f2.place_of_point(point, 2), place)
        self.assertEqual(self.f2.points_of_place(place, 3), [])
        self.assertEqual(self.f2.points_of_place(INFINITY, 3), [INFINITY])

    def test_places_above(self):
        """x^2+x+1 splits over F_4, x stays a single place"""
        target = self.f2.constant_extension(2)
        above = self.f2.places_above(self.place(self.f2, 1, 1, 1), target)
        self.assertEqual([place.degree for place in above], [1, 1])
        self.assertEqual(len(self.f2.places_above(self.place(self.f2, 0, 1), target)), 1)
        self.assertEqual(self.f2.places_above(INFINITY, target), [INFINITY])

    def test_monomial(self):
        place = self.place(self.f2, 1, 1, 1)
        for s in (1, 2, 3):
            h = self.f2.monomial(place, s, 2)
            self.assertEqual(self.f2.valuation(h, place), -s)
            self.assertEqual(self.f2.leading_coefficient(h, place), 2)

    def test_evaluation(self):
        x = self.f3.x
        f = (x * x + 1) / (x + 1)
        self.assertEqual(f(0), 1)
        with self.assertRaises(PoleEvaluationError):
            f(2)
        self.assertEqual(self.f3.value_at(1 / f, INFINITY), 0)
        with self.assertRaises(PoleEvaluationError):
            self.f3.value_at(f, INFINITY)
