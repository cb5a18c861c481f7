import random

from django.test import SimpleTestCase

from ..asw.conductor import is_nondegenerate
from ..exceptions import DegenerateVectorError, ParameterError
from ..rings.cyclotomic import CyclotomicInteger
from ..sums.lfunctions import l_function, power_sums_from_coefficients
from .tests import projective_line, witt_fn


class LFunctionTest(SimpleTestCase):

    def setUp(self):
        self.field = projective_line(2)
        self.x = self.field.x

    def test_linear_polynomial(self):
        """L(T) = 1 + (1 + zeta) T for (x, 0) over F_2"""
        result = l_function(witt_fn(self.field, self.x, 0))
        zeta = CyclotomicInteger.zeta_power(2, 2, 1)
        self.assertEqual(result.claimed_degree, 1)
        self.assertEqual(result.degree, 1)
        self.assertEqual(result.coefficients[:2], [CyclotomicInteger.one(2, 2), 1 + zeta])
        self.assertTrue(result.degree_ok)
        self.assertTrue(result.rh_ok)

    def test_artin_schreier_curve(self):
        """y^2 + y = x^3 over F_2: L(T) = 1 + 2 T^2"""
        result = l_function(witt_fn(self.field, self.x ** 3))
        self.assertEqual(result.claimed_degree, 2)
        self.assertEqual(result.coefficients[1], 0)
        self.assertEqual(result.coefficients[2], 2)
        self.assertTrue(result.rh_ok)

    def test_degree_five(self):
        result = l_function(witt_fn(self.field, self.x ** 3, 0))
        self.assertEqual(result.conductor.degree, 7)
        self.assertEqual(result.degree, 5)
        self.assertTrue(result.degree_ok)
        self.assertTrue(result.rh_ok)
        self.assertEqual(len(result.root_moduli), 5)

    def test_newton_round_trip(self):
        result = l_function(witt_fn(self.field, self.x, 0), n=4)
        self.assertEqual(power_sums_from_coefficients(result.coefficients, 4), result.power_sums)

    def test_as_dict(self):
        document = l_function(witt_fn(self.field, self.x, 0)).as_dict()
        self.assertEqual(document["claimed_degree"], 1)
        self.assertEqual(document["residuals"], ["0", "0"])
        self.assertEqual(document["conductor"], {"inf": {"degree": 1, "rp": 2}})

    def test_too_few_terms(self):
        with self.assertRaises(ParameterError):
            l_function(witt_fn(self.field, self.x, 0), n=2)

    def test_degenerate(self):
        with self.assertRaises(DegenerateVectorError):
            l_function(witt_fn(self.field, self.x * self.x + self.x, 0))


class RandomLFunctionTest(SimpleTestCase):
    """Seeded nondegenerate vectors of length 2 on P^1 over F_2, F_3 and F_4"""

    def random_coordinate(self, field, rng, order, at_zero):
        base = field.field
        x = field.x
        c = field.constant(base.random_element(rng))
        for k in range(1, order + 1):
            c = c + field.constant(base.random_element(rng)) * x ** k
            if at_zero:
                c = c + field.constant(base.random_element(rng)) / x ** k
        return c

    def test_degree_and_moduli(self):
        rng = random.Random(23)
        checked = 0
        cases = [
            (projective_line(2), (1, 2), True),
            (projective_line(3), (1, 1), False),
            (projective_line(2, 2), (1, 1), False),
        ]
        for field, orders, at_zero in cases:
            for _ in range(6):
                f = witt_fn(field, *[self.random_coordinate(field, rng, order, at_zero) for order in orders])
                if not is_nondegenerate(f):
                    continue
                result = l_function(f)
                self.assertTrue(result.degree_ok, str(f))
                self.assertTrue(result.rh_ok, "%s: %s" % (f, result.root_moduli))
                self.assertEqual(len(result.root_moduli), result.claimed_degree)
                checked += 1
        self.assertGreaterEqual(checked, 8)
