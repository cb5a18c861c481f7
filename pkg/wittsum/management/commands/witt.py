from ...exceptions import ParameterError
from ...rings.base import INTEGERS
from ...rings.witt import WittParams
from ...utils.parsing import parse_field_name, parse_witt_vector
from ..base import Output, WittSumCommand

BINARY = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}

UNARY = ("neg", "V", "F", "ghost")


class Command(WittSumCommand):
    help = "Arithmetic of Witt vectors over F_q or over the integers"

    def add_command_arguments(self, parser):
        parser.add_argument("op", choices=tuple(BINARY) + UNARY, help="""Operation""")
        parser.add_argument("vectors", nargs="+", metavar="VECTOR", help="""Operands, for example "(1,0)" """)
        group = parser.add_argument_group("witt vectors")
        group.add_argument("--p", dest="p", type=int, required=True, help="""Prime p""")
        group.add_argument("--l", dest="l", type=int, required=True, help="""Length of the vectors""")
        group.add_argument(
            "--over",
            dest="over",
            default="z",
            help="""Coefficient ring: f<q> for F_q, z for the integers (default: z)""",
        )
        group.add_argument(
            "--k",
            dest="k",
            type=int,
            default=1,
            help="""Power of the Verschiebung (V only, default: 1)""",
        )

    def run(self, config):
        op = config["op"]
        params = WittParams(config["p"], config["l"])
        field = parse_field_name(config["over"], params.p)
        ring = INTEGERS if field is None else field

        arity = 2 if op in BINARY else 1
        if len(config["vectors"]) != arity:
            raise ParameterError("%s takes %d operands, got %d" % (op, arity, len(config["vectors"])))
        operands = [parse_witt_vector(text, ring, params) for text in config["vectors"]]

        if op in BINARY:
            result = BINARY[op](*operands)
        elif op == "neg":
            result = -operands[0]
        elif op == "V":
            result = operands[0].verschiebung(config["k"])
        elif op == "F":
            if field is None:
                raise ParameterError("F is the coordinatewise p-th power over F_q only")
            result = operands[0].frobenius()
        else:
            ghost = list(operands[0].ghost_components())
            return Output({"op": op, "ghost": ghost}, ["i", "ghost"], [[i, w] for i, w in enumerate(ghost)])

        document = {"op": op, "over": config["over"], "result": str(result), "coordinates": [str(c) for c in result]}
        if field is None:
            document["ghost"] = list(result.ghost_components())
        return Output(document, ["i", "coordinate"], [[i, str(c)] for i, c in enumerate(result)])
