import json
import math
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ..management.base import WittSumCommand


class CommandTestMixin(object):
    """Runs a management command and decodes its JSON output"""

    def run_command(self, name, *args, **options):
        out = StringIO()
        call_command(name, *args, stdout=out, **options)
        return out.getvalue()

    def run_json(self, name, *args, **options):
        return json.loads(self.run_command(name, *args, **options))

    def assertExitCode(self, code, name, *args, **options):
        with self.assertRaises(CommandError) as context:
            self.run_command(name, *args, **options)
        self.assertEqual(context.exception.returncode, code)


class SumCommandTest(CommandTestMixin, SimpleTestCase):

    def test_teichmuller_sum(self):
        document = self.run_json("sum", ring="2,2,1", f="T")
        self.assertEqual(document["sum"]["coeffs"], [1, 1])
        self.assertEqual(document["ring"], {"p": 2, "l": 2, "m": 1})
        self.assertIn("kumar", document["bounds"])
        self.assertTrue(document["pass"])

    def test_point_sum(self):
        document = self.run_json("sum", ring="2,2,1", f_witt="(x, 0)")
        self.assertEqual(document["sum"]["coeffs"], [1, 1])
        self.assertEqual(document["conductor"], {"inf": {"degree": 1, "rp": 2}})
        self.assertAlmostEqual(document["bounds"]["thm31"], math.sqrt(2))
        self.assertEqual(self.run_json("sum", ring="2,2,1", f_witt="(x, 0)", d=2)["sum"]["coeffs"], [0, -2])

    def test_elliptic_curve(self):
        document = self.run_json("sum", ring="2,1,1", f_witt="(x)", curve="E:0,0,1,0,0")
        self.assertEqual(document["sum"]["coeffs"], [2])
        self.assertEqual(document["sum"]["excluded"], ["O"])

    def test_elliptic_poles_of_degree_two(self):
        document = self.run_json("sum", ring="2,2,1", f_witt="(y/(x^2+x+1), 0)", curve="E:0,0,1,0,0")
        self.assertEqual(document["sum"]["coeffs"], [2, 1])
        self.assertEqual(sorted(entry["degree"] for entry in document["conductor"].values()), [2, 2])
        self.assertEqual(sorted(entry["rp"] for entry in document["conductor"].values()), [2, 2])

    def test_csv(self):
        text = self.run_command("sum", ring="2,2,1", f_witt="(x, 0)", format="csv")
        self.assertEqual(text.splitlines()[0], "instance,|S|,bound,ratio")
        self.assertEqual(len(text.splitlines()), 2)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "sum.json")
            self.assertEqual(self.run_command("sum", ring="2,2,1", f="T", out=path), "")
            with open(path) as stream:
                self.assertEqual(json.load(stream)["sum"]["terms"], 2)

    def test_usage_errors(self):
        self.assertExitCode(2, "sum", ring="2,2,1")
        self.assertExitCode(2, "sum", f="T")
        self.assertExitCode(2, "sum", ring="2,2,1", f_witt="(x, 0", d=1)
        self.assertExitCode(2, "sum", ring="2,2,1", f_witt="(x, 0)", d=0)

    def test_enumeration_cap(self):
        with self.settings(WITTSUM_ENUMERATION_CAP=2):
            self.assertExitCode(3, "sum", ring="2,2,1", f_witt="(x, 0)")


class LFunctionCommandTest(CommandTestMixin, SimpleTestCase):

    def test_polynomial(self):
        document = self.run_json("lfun", ring="2,2,1", f_witt="(x, 0)")
        self.assertEqual(document["polynomial"], ["1", "1+z", "0", "0"])
        self.assertEqual(document["claimed_degree"], 1)
        self.assertTrue(document["rh_ok"])
        self.assertTrue(document["degree_ok"])

    def test_degenerate(self):
        self.assertExitCode(4, "lfun", ring="2,2,1", f_witt="(x^2 + x, 0)")

    def test_too_few_terms(self):
        self.assertExitCode(2, "lfun", ring="2,2,1", f_witt="(x, 0)", terms=2)


class BoundCommandTest(CommandTestMixin, SimpleTestCase):

    def test_kumar(self):
        document = self.run_json("bound", "kumar", ring="2,2,3", degs="3,1")
        self.assertAlmostEqual(document["value"], 14.1421, places=4)
        self.assertAlmostEqual(self.run_json("bound", "kumar", ring="2,2,1", f="T^3 + 2*T")["value"], 5 * math.sqrt(2))

    def test_conductor_bound(self):
        document = self.run_json("bound", "thm31", ring="2,2,1", f_witt="(x^3, 0)")
        self.assertAlmostEqual(document["value"], 5 * math.sqrt(2))

    def test_closed_forms(self):
        document = self.run_json("bound", "cor52", p=3, g=1, poles="1:2")
        self.assertEqual(document["coefficient"], 13)
        self.assertAlmostEqual(document["value"], 13 * math.sqrt(3))
        document = self.run_json("bound", "thm51", p=3, g=1, poles="1:2:1", divisor=True)
        self.assertEqual(document["coefficient"], 13)
        self.assertEqual(document["exponents"], [12])
        self.assertEqual(document["inputs"]["poles"], [{"degree": 1, "orders": [2], "v": 1, "v0": 0}])

    def test_estimate(self):
        self.assertEqual(self.run_json("bound", "estimate", p=2, n=2)["value"], 6)

    def test_errors(self):
        self.assertExitCode(2, "bound", "cor52", p=3, g=1, poles="1")
        self.assertExitCode(2, "bound", "cor52", p=3, g=1, poles=";")
        self.assertExitCode(2, "bound", "thm51", p=3, g=1, poles="1:2", divisor=True)
        self.assertExitCode(2, "bound", "cor52", g=1, poles="1:2")
        self.assertExitCode(4, "bound", "cor53", p=2, g=1, poles="1:2")
        self.assertExitCode(4, "bound", "kumar", ring="2,2,1", degs="0,0")


class WittCommandTest(CommandTestMixin, SimpleTestCase):

    def test_addition(self):
        document = self.run_json("witt", "add", "(1,0)", "(1,0)", p=2, l=2, over="f2")
        self.assertEqual(document["result"], "(0,1)")
        self.assertEqual(document["coordinates"], ["0", "1"])

    def test_operations(self):
        self.assertEqual(self.run_json("witt", "mul", "(1,1)", "(1,1)", p=2, l=2, over="f2")["result"], "(1,0)")
        self.assertEqual(self.run_json("witt", "V", "(1,1)", p=2, l=2, over="f2")["result"], "(0,1)")
        self.assertEqual(self.run_json("witt", "F", "(g,1)", p=2, l=2, over="f4")["coordinates"][1], "1")

    def test_ghost_components(self):
        self.assertEqual(self.run_json("witt", "ghost", "(2,3)", p=2, l=2)["ghost"], [2, 10])
        self.assertEqual(self.run_json("witt", "ghost", "(1,1)", p=3, l=2)["ghost"], [1, 4])
        document = self.run_json("witt", "add", "(1,0)", "(1,0)", p=2, l=2)
        self.assertEqual(document["ghost"], [2, 2])

    def test_errors(self):
        self.assertExitCode(2, "witt", "F", "(1,0)", p=2, l=2)
        self.assertExitCode(2, "witt", "add", "(1,0)", p=2, l=2, over="f2")
        self.assertExitCode(2, "witt", "add", "(1,0)", "(1,0,1)", p=2, l=2, over="f2")
        self.assertExitCode(2, "witt", "neg", "(1,0)", p=2, l=2, over="f3")


class GenusCommandTest(CommandTestMixin, SimpleTestCase):

    def test_artin_schreier_curve(self):
        document = self.run_json("genus", ring="2,1,1", f_witt="(x^3)")
        self.assertEqual(document["genus"], 1)
        self.assertEqual(document["multiple_degrees"], [4])
        self.assertEqual(document["base_genus"], 0)

    def test_length_two(self):
        document = self.run_json("genus", ring="2,2,1", f_witt="(x, 0)")
        self.assertEqual(document["genus"], 1)
        self.assertEqual(document["multiple_degrees"], [3, 2, 3])

    def test_csv(self):
        text = self.run_command("genus", ring="3,1,1", f_witt="(x^2)", format="csv")
        self.assertEqual(text, "n,conductor_degree\n1,3\n2,3\n")


class VerifyCommandTest(CommandTestMixin, SimpleTestCase):

    def test_projective_line_family(self):
        document = self.run_json("verify", "thm31", ring="2,2,1", max_a=2, max_b=1, max_d=1)
        self.assertTrue(document["summary"]["pass"])
        self.assertEqual(document["summary"]["instances"], 4)
        self.assertEqual(len(document["reports"]), 4)

    def test_random_families_are_seeded(self):
        first = self.run_command("verify", "theorem12", count=3, max_degree=2, seed=5)
        second = self.run_command("verify", "theorem12", count=3, max_degree=2, seed=5)
        self.assertEqual(first, second)
        self.assertTrue(json.loads(first)["summary"]["pass"])

    def test_oracle_family(self):
        document = self.run_json("verify", "rp-oracle", count=3, max_pole=2, oracle_bound=3)
        self.assertTrue(document["summary"]["pass"])
        self.assertExitCode(2, "verify", "rp-oracle", ring="3,2,1")

    def test_elliptic_family(self):
        document = self.run_json("verify", "elliptic", ring="2,2,1", max_d=1)
        self.assertTrue(document["summary"]["pass"])
        self.assertExitCode(2, "verify", "elliptic", ring="2,2,1", curve="P1")


class FailingCommand(WittSumCommand):
    help = "Raises an error outside of the wittsum hierarchy"

    def run(self, config):
        raise ZeroDivisionError("division by zero")


class UnexpectedErrorTest(SimpleTestCase):

    def test_unexpected_error(self):
        with self.assertLogs("wittsum.management", "ERROR"):
            with self.assertRaises(CommandError) as context:
                call_command(FailingCommand(), stdout=StringIO())
        self.assertEqual(context.exception.returncode, 1)
        self.assertTrue(str(context.exception).startswith("ZeroDivisionError"))

    def test_unwritable_output(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "missing", "sum.json")
            with self.assertRaises(CommandError) as context:
                call_command("sum", ring="2,2,1", f="T", out=path, stdout=StringIO())
        self.assertEqual(context.exception.returncode, 1)
