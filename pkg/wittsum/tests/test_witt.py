import random

from django.test import SimpleTestCase

from ..exceptions import ParameterError
from ..rings.base import INTEGERS
from ..rings.finite_fields import get_field
from ..rings.witt import WittParams, WittVector, compute_universal_polys
from .tests import projective_line, vector, witt_fn


class UniversalPolynomialsTest(SimpleTestCase):
    """Ghost recursion over the integers"""

    def test_length_one(self):
        """W_1(A) is A"""
        polys = compute_universal_polys(WittParams(5, 1))
        self.assertEqual(polys.terms("add", 0, 5), [((0, 1), 1), ((1, 0), 1)])
        self.assertEqual(polys.terms("mul", 0, 5), [((1, 1), 1)])

    def test_sum_polynomial(self):
        """S_1 = X_1 + Y_1 - X_0 Y_0 over the integers, X_0 Y_0 keeps a unit coefficient mod 2"""
        polys = compute_universal_polys(WittParams(2, 2))
        # exponents of X_0, X_1, Y_0, Y_1
        self.assertEqual(
            dict(polys.terms("add", 1, 0)),
            {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1, (1, 0, 1, 0): -1},
        )
        self.assertEqual(
            dict(polys.terms("add", 1, 2)),
            {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1, (1, 0, 1, 0): 1},
        )

    def test_product_polynomial(self):
        """The term 2 X_1 Y_1 of M_1 vanishes mod 2"""
        polys = compute_universal_polys(WittParams(2, 2))
        self.assertEqual(dict(polys.terms("mul", 1, 2)), {(2, 0, 0, 1): 1, (0, 1, 2, 0): 1})
        self.assertEqual(dict(polys.terms("mul", 1, 0))[(0, 1, 0, 1)], 2)

    def test_cached(self):
        self.assertIs(compute_universal_polys(WittParams(3, 2)), compute_universal_polys(WittParams(3, 2)))


class WittParamsTest(SimpleTestCase):

    def test_prime_required(self):
        with self.assertRaises(ParameterError):
            WittParams(4, 2)

    def test_length_ceiling(self):
        with self.assertRaises(ParameterError):
            WittParams(2, 0)
        with self.settings(WITTSUM_MAX_WITT_LENGTH=2):
            with self.assertRaises(ParameterError):
                WittParams(2, 3)


class WittArithmeticTest(SimpleTestCase):
    """Ring operations of W_l(F_q)"""

    def setUp(self):
        self.f2 = get_field(2, 1)
        self.f3 = get_field(3, 1)

    def test_addition_carries(self):
        """1 + 1 = 2 in Z/4 and Z/9"""
        self.assertEqual(vector(self.f2, 2, 1, 0) + vector(self.f2, 2, 1, 0), vector(self.f2, 2, 0, 1))
        self.assertEqual(vector(self.f3, 3, 1, 0) + vector(self.f3, 3, 1, 0), vector(self.f3, 3, 2, 1))

    def test_additive_identity(self):
        a = vector(self.f3, 3, 2, 1)
        self.assertEqual(a + WittVector.zero(self.f3, a.params), a)

    def test_product(self):
        """3 * 3 = 1 in Z/4"""
        a = vector(self.f2, 2, 1, 1)
        self.assertEqual(a * a, vector(self.f2, 2, 1, 0))

    def test_unit_and_zero(self):
        a = vector(self.f3, 3, 2, 1)
        self.assertEqual(a * WittVector.one(self.f3, a.params), a)
        self.assertTrue((a * WittVector.zero(self.f3, a.params)).is_zero())

    def test_negation(self):
        a = vector(self.f3, 3, 1, 2)
        self.assertTrue((a + (-a)).is_zero())
        self.assertEqual(a - a, WittVector.zero(self.f3, a.params))

    def test_ring_axioms_over_f4(self):
        """Associativity and distributivity on a few vectors of W_2(F_4)"""
        f4 = get_field(2, 2)
        a, b, c = vector(f4, 2, 1, 2), vector(f4, 2, 3, 1), vector(f4, 2, 2, 3)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)

    def test_verschiebung_frobenius(self):
        a = vector(self.f2, 2, 1, 1)
        self.assertEqual(a.verschiebung(), vector(self.f2, 2, 0, 1))
        self.assertEqual(a.frobenius(), a)
        self.assertTrue(a.verschiebung(2).is_zero())
        with self.assertRaises(ParameterError):
            a.verschiebung(3)

    def test_p_is_verschiebung_of_frobenius(self):
        """p x = V F x"""
        f4 = get_field(2, 2)
        for a in (vector(self.f2, 2, 1, 0), vector(f4, 2, 2, 3), vector(f4, 2, 3, 0)):
            self.assertEqual(a.times_int(2), a.frobenius().verschiebung())
            self.assertEqual(a.verschiebung().frobenius(), a.frobenius().verschiebung())

    def test_mismatched_vectors(self):
        with self.assertRaises(ParameterError):
            vector(self.f2, 2, 1, 0) + vector(self.f3, 3, 1, 0)
        with self.assertRaises(ParameterError):
            WittVector(self.f2, WittParams(2, 2), [1])

    def test_hash(self):
        field = projective_line(2)
        x = field.x
        a = witt_fn(field, x * x / x, 1)
        b = witt_fn(field, x, field.from_int(1))
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(len({a, b, vector(self.f2, 2, 1, 0), vector(self.f2, 2, 1, 0)}), 2)
        self.assertNotEqual(vector(self.f2, 2, 1, 0), vector(get_field(2, 2), 2, 1, 0))

    def test_string(self):
        self.assertEqual(str(vector(self.f2, 2, 0, 1)), "(0,1)")


class WittRingPropertiesTest(SimpleTestCase):
    """Seeded random vectors of W_l(F_q) for p in 2, 3, 5 and l up to 3"""

    def setUp(self):
        self.rng = random.Random(11)
        self.cases = [
            (get_field(2, 2), 3), (get_field(3, 1), 3), (get_field(5, 1), 3),
            (get_field(3, 2), 2), (get_field(5, 1), 1),
        ]

    def random_vector(self, field, l):
        return WittVector(field, WittParams(field.p, l), [field.random_element(self.rng) for _ in range(l)])

    def test_ring_axioms(self):
        for field, l in self.cases:
            one = WittVector.one(field, WittParams(field.p, l))
            for _ in range(8):
                a, b, c = [self.random_vector(field, l) for _ in range(3)]
                self.assertEqual((a + b) + c, a + (b + c))
                self.assertEqual(a + b, b + a)
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual(a * b, b * a)
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertEqual(a * one, a)
                self.assertTrue((a - a).is_zero())

    def test_verschiebung_products(self):
        """V^a x V^b y = V^{a+b}(F^b x F^a y)"""
        for field, l in self.cases:
            for _ in range(4):
                x, y = self.random_vector(field, l), self.random_vector(field, l)
                p = field.p
                self.assertEqual(x.frobenius().verschiebung(), x.times_int(p))
                self.assertEqual(x.verschiebung().frobenius(), x.times_int(p))
                for a in range(l + 1):
                    for b in range(l + 1 - a):
                        left = x.verschiebung(a) * y.verschiebung(b)
                        fx, fy = x, y
                        for _ in range(b):
                            fx = fx.frobenius()
                        for _ in range(a):
                            fy = fy.frobenius()
                        self.assertEqual(left, (fx * fy).verschiebung(a + b), "a=%d b=%d" % (a, b))

    def test_frobenius_is_a_ring_morphism(self):
        for field, l in self.cases:
            for _ in range(4):
                a, b = self.random_vector(field, l), self.random_vector(field, l)
                self.assertEqual((a + b).frobenius(), a.frobenius() + b.frobenius())
                self.assertEqual((a * b).frobenius(), a.frobenius() * b.frobenius())


class GhostComponentsTest(SimpleTestCase):

    def test_values(self):
        self.assertEqual(vector(INTEGERS, 2, 2, 3).ghost_components(), (2, 10))
        self.assertEqual(vector(INTEGERS, 3, 1, 1).ghost_components(), (1, 4))
        self.assertEqual(vector(INTEGERS, 2, 0, 0).ghost_components(), (0, 0))

    def test_ghost_map_is_a_ring_morphism(self):
        a, b = vector(INTEGERS, 3, 2, -1, 4), vector(INTEGERS, 3, -3, 5, 1)
        ga, gb = a.ghost_components(), b.ghost_components()
        self.assertEqual((a + b).ghost_components(), tuple(x + y for x, y in zip(ga, gb)))
        self.assertEqual((a * b).ghost_components(), tuple(x * y for x, y in zip(ga, gb)))
        self.assertEqual((-a).ghost_components(), tuple(-x for x in ga))

    def test_finite_field(self):
        with self.assertRaises(ParameterError):
            vector(get_field(2, 1), 2, 1, 0).ghost_components()
