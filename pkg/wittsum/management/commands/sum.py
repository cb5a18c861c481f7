from ...asw.conductor import conductor, is_nondegenerate
from ...conf import setting
from ...exceptions import DegenerateVectorError, ParameterError
from ...rings.galois_rings import get_galois_ring
from ...sums.bounds import bound_kumar_for, bound_thm31
from ...sums.charsums import sum_teichmuller, sum_witt
from ...utils import reports
from ...utils.parsing import parse_gr_polynomial
from ..base import Output, WittSumCommand, add_witt_function_arguments, curve_and_function


def parse_twist(config, ring):
    """The twist ``b`` of ``--twist``, an element of ``ring``"""
    text = config["twist"]
    if text is None:
        return None
    b = parse_gr_polynomial(text, ring)
    if not b.is_constant():
        raise ParameterError("the twist %s should be a constant" % text)
    return b.coefficient(0)


def bound_output(f, result, bounds, name, ring_parameters, cond=None):
    bound = bounds.get(name)
    passed = None if bound is None else result.modulus <= bound + setting("WITTSUM_BOUND_SLACK")
    document = reports.sum_document(ring_parameters, f, result, cond, bounds, passed)
    ratio = result.modulus / bound if bound else None
    rows = [[str(f), result.modulus, bound, ratio]]
    return Output(document, reports.SWEEP_HEADER, rows)


class Command(WittSumCommand):
    help = "Exact exponential sum over a Teichmuller set or over the points of a curve"

    def add_command_arguments(self, parser):
        add_witt_function_arguments(parser)
        group = parser.add_argument_group("sum")
        group.add_argument(
            "--f",
            dest="f",
            metavar="POLY",
            help="""Polynomial in T over GR(p^l,m), summed over the Teichmuller set""",
        )
        group.add_argument(
            "--d",
            dest="d",
            type=int,
            default=1,
            help="""Extension degree of the points summed over (with --f-witt)""",
        )
        group.add_argument(
            "--twist",
            dest="twist",
            default=None,
            help="""Element b of GR(p^l,m) of the character psi_b (default: 1)""",
        )

    def run(self, config):
        p, l, m = config.ring_parameters
        ring = get_galois_ring(p, l, m)
        b = parse_twist(config, ring)
        if config["f"] is not None:
            f = parse_gr_polynomial(config["f"], ring)
            result = sum_teichmuller(f, b)
            bounds = {}
            try:
                bounds["kumar"] = bound_kumar_for(f)
            except DegenerateVectorError:
                pass
            return bound_output(f, result, bounds, "kumar", config.ring)

        if config["f_witt"] is None:
            raise ParameterError("one of --f and --f-witt is required")
        d = config["d"]
        if d < 1:
            raise ParameterError("the extension degree must be positive")
        _, f = curve_and_function(config)
        result = sum_witt(f, d, b=b)
        bounds = {"thm31": bound_thm31(f, d)} if is_nondegenerate(f) else {}
        return bound_output(f, result, bounds, "thm31", config.ring, conductor(f))
