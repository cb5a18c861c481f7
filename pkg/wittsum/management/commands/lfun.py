from ...rings.galois_rings import get_galois_ring
from ...sums.lfunctions import l_function
from ..base import Output, WittSumCommand, add_witt_function_arguments, curve_and_function
from .sum import parse_twist


class Command(WittSumCommand):
    help = "L-polynomial of a nondegenerate Witt function, with its degree and root checks"

    def add_command_arguments(self, parser):
        add_witt_function_arguments(parser)
        group = parser.add_argument_group("L-function")
        group.add_argument(
            "--terms",
            dest="terms",
            type=int,
            default=None,
            help="""Number N of point sums S_1..S_N (default: the expected degree plus 2)""",
        )
        group.add_argument(
            "--twist",
            dest="twist",
            default=None,
            help="""Element b of GR(p^l,m) of the character psi_b (default: 1)""",
        )

    def run(self, config):
        p, l, m = config.ring_parameters
        _, f = curve_and_function(config)
        b = parse_twist(config, get_galois_ring(p, l, m))
        result = l_function(f, config["terms"], b)
        document = {"ring": {"p": p, "l": l, "m": m}, "f": str(f)}
        document.update(result.as_dict())
        rows = [[n, str(c), c.abs_complex()] for n, c in enumerate(result.coefficients)]
        return Output(document, ["n", "coefficient", "abs"], rows, failed=not (result.degree_ok and result.rh_ok),
                      message="the L-polynomial checks failed for %s" % f)
