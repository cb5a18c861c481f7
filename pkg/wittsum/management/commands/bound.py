from ...exceptions import ExpressionSyntaxError, ParameterError
from ...rings.galois_rings import get_galois_ring
from ...sums import bounds
from ...utils.parsing import parse_gr_polynomial, parse_int_list
from ..base import Output, WittSumCommand, add_witt_function_arguments, curve_and_function

KINDS = ("kumar", "thm31", "thm51", "cor52", "cor53", "estimate")

HEADER = ["kind", "coefficient", "value"]


def parse_poles(text):
    """``"deg:orders[:v[:v0]]"`` entries separated by ``;``, orders being comma separated"""
    poles = []
    for entry in text.split(";"):
        if not entry.strip():
            continue
        fields = entry.split(":")
        if not 2 <= len(fields) <= 4:
            raise ExpressionSyntaxError(entry, "expected deg:orders[:v[:v0]]")
        try:
            degree = int(fields[0])
            extra = [int(field) for field in fields[2:]]
        except ValueError:
            raise ExpressionSyntaxError(entry, "expected integers")
        orders = parse_int_list(fields[1])
        if not orders:
            raise ExpressionSyntaxError(entry, "at least one pole order is needed")
        poles.append(bounds.PoleData(degree, orders, *extra))
    if not poles:
        raise ParameterError("--poles lists no pole place")
    return poles


class Command(WittSumCommand):
    help = """Evaluates one of the closed form bounds.

    kumar: --ring p,l,m with --degs or --f; thm31: --ring, --f-witt, --curve, --d;
    thm51, cor52, cor53: --p, --l, --m, --g, --poles; estimate: --p, --l, --n, --v, --v0.
    """

    def add_command_arguments(self, parser):
        parser.add_argument("kind", choices=KINDS, help="""Bound to evaluate""")
        add_witt_function_arguments(parser)

        group = parser.add_argument_group("polynomial bounds")
        group.add_argument(
            "--degs",
            dest="degs",
            metavar="DEG,...",
            help="""Degrees of the components f_0, f_1, ... (-1 for a zero component)""",
        )
        group.add_argument(
            "--f",
            dest="f",
            metavar="POLY",
            help="""Polynomial in T over GR(p^l,m) whose component degrees are used""",
        )
        group.add_argument(
            "--d",
            dest="d",
            type=int,
            default=1,
            help="""Extension degree of the points (default: 1)""",
        )

        group = parser.add_argument_group("closed forms")
        group.add_argument("--p", dest="p", type=int, help="""Characteristic""")
        group.add_argument("--l", dest="l", type=int, default=2, help="""Witt length (default: 2)""")
        group.add_argument("--m", dest="m", type=int, default=1, help="""Residue degree (default: 1)""")
        group.add_argument("--g", dest="g", type=int, default=0, help="""Genus of the curve (default: 0)""")
        group.add_argument(
            "--poles",
            dest="poles",
            metavar="POLES",
            help="""Pole places "deg:n_0,n_1,...[:v[:v0]]" separated by ";" """,
        )
        group.add_argument(
            "--divisor",
            dest="divisor",
            action="store_true",
            default=False,
            help="""Checks that the multiplicities v form a divisor of the expected degree""",
        )
        group.add_argument("--n", dest="n", type=int, help="""Pole order (estimate)""")
        group.add_argument("--v", dest="v", type=int, default=0, help="""Multiplicity v (estimate)""")
        group.add_argument("--v0", dest="v0", type=int, default=0, help="""Multiplicity v0 (estimate)""")

    def _inputs(self, config):
        return bounds.BoundInputs(
            config.require("p"), config["l"], config["m"], config["g"],
            parse_poles(config.require("poles")), config["divisor"]
        )

    def run(self, config):
        kind = config["kind"]
        coefficient = None
        inputs = None
        if kind == "kumar":
            p, l, m = config.ring_parameters
            if config["f"] is not None:
                value = bounds.bound_kumar_for(parse_gr_polynomial(config["f"], get_galois_ring(p, l, m)))
            else:
                value = bounds.bound_kumar(p, l, m, parse_int_list(config.require("degs")))
        elif kind == "thm31":
            if config["d"] < 1:
                raise ParameterError("the extension degree must be positive")
            _, f = curve_and_function(config)
            value = bounds.bound_thm31(f, config["d"])
        elif kind == "estimate":
            value = coefficient = bounds.pole_order_estimate(
                config.require("n"), config["v"], config["v0"], config.require("p"), config["l"]
            )
        else:
            inputs = self._inputs(config)
            coefficient = getattr(bounds, "%s_coefficient" % kind)(inputs)
            value = coefficient * inputs.sqrt_q

        document = {"kind": kind, "value": value, "coefficient": coefficient}
        if inputs is not None:
            document["inputs"] = inputs.as_dict()
            document["exponents"] = bounds.local_exponents(inputs)
        return Output(document, HEADER, [[kind, coefficient, value]])
