from django.test import SimpleTestCase

from ..exceptions import ParameterError
from ..sums.sweeps import (
    FAMILIES,
    elliptic_sweep,
    kumar_sweep,
    rp_oracle_sweep,
    theorem12_sweep,
    thm31_sweep,
    verify_sweep,
)
from .tests import ordinary_curve, supersingular_curve


class GaloisRingSweepTest(SimpleTestCase):

    def test_small_family(self):
        result = kumar_sweep(p=2, l=2, m=2, degrees=(1, 1))
        self.assertTrue(result.passed)
        self.assertEqual(result.skipped, 16)
        self.assertEqual(len(result.reports), 240)
        self.assertLessEqual(result.max_ratio, 1 + 1e-9)

    def test_labels(self):
        result = kumar_sweep(p=2, l=2, m=1, degrees=(1,))
        self.assertEqual([report.instance for report in result.reports], ["[0,1]", "[1,1]"])

    def test_too_many_degrees(self):
        with self.assertRaises(ParameterError):
            kumar_sweep(p=2, l=1, m=1, degrees=(1, 1))


class FunctionFieldSweepTest(SimpleTestCase):

    def test_projective_line(self):
        result = thm31_sweep(p=2, l=2, m=1, max_a=3, max_b=2, max_d=2)
        self.assertTrue(result.passed)
        self.assertEqual(len(result.reports), 18)
        self.assertEqual(result.summary()["violations"], 0)

    def test_elliptic_curve(self):
        result = elliptic_sweep(supersingular_curve(), l=2, max_rp=9, max_d=3)
        self.assertTrue(result.passed)
        self.assertTrue(result.reports)
        for report in result.reports:
            self.assertTrue(report.checks["cor52_dominates"])

    def test_ordinary_elliptic_curve(self):
        """y^2 = x^3 + x^2 + 1 over F_3, up to F_27"""
        result = elliptic_sweep(ordinary_curve(), l=2, max_rp=9, max_d=3)
        self.assertTrue(result.passed)
        self.assertEqual(result.summary()["violations"], 0)
        self.assertEqual(sorted(set(report.details["d"] for report in result.reports)), [1, 2, 3])
        for report in result.reports:
            self.assertTrue(report.checks["cor52_dominates"])


class IdentitySweepTest(SimpleTestCase):

    def test_teichmuller_identity(self):
        result = theorem12_sweep(p=2, l=2, m=1, count=5, max_degree=3, seed=1)
        self.assertTrue(result.passed)
        self.assertEqual(len(result.reports), 5)

    def test_length_three(self):
        for p, m in ((3, 1), (2, 2)):
            result = theorem12_sweep(p=p, l=3, m=m, count=6, max_degree=2, seed=3)
            self.assertTrue(result.passed)
            for report in result.reports:
                self.assertTrue(report.checks["identity"], report.instance)

    def test_seeded(self):
        first = theorem12_sweep(p=3, l=2, m=1, count=3, max_degree=2, seed=7)
        second = theorem12_sweep(p=3, l=2, m=1, count=3, max_degree=2, seed=7)
        self.assertEqual([r.instance for r in first.reports], [r.instance for r in second.reports])

    def test_reduction_oracle(self):
        result = rp_oracle_sweep(count=5, max_pole=2, bound=3, seed=1)
        self.assertTrue(result.passed)
        for report in result.reports:
            self.assertEqual(report.details["rp"], report.details["oracle"])


class VerifySweepTest(SimpleTestCase):

    def test_dispatch(self):
        self.assertEqual(sorted(FAMILIES), ["elliptic", "kumar", "rp-oracle", "theorem12", "thm31"])
        result = verify_sweep("thm31", p=2, l=1, m=1, max_a=3, max_b=0)
        self.assertEqual(result.family, "thm31")
        self.assertTrue(result.passed)

    def test_unknown_family(self):
        with self.assertRaises(ParameterError):
            verify_sweep("weil")
