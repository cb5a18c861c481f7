from ...exceptions import ParameterError
from ...rings.finite_fields import get_field
from ...sums.sweeps import FAMILIES, verify_sweep
from ...utils import reports
from ...utils.parsing import parse_curve, parse_int_list
from ..base import Output, WittSumCommand

# y^2 + y = x^3 over F_2
DEFAULT_ELLIPTIC_CURVE = "E:0,0,1,0,0"

# command line option -> keyword of the sweep, per family
FAMILY_OPTIONS = {
    "kumar": {"degs": "degrees"},
    "thm31": {"max_a": "max_a", "max_b": "max_b", "max_d": "max_d"},
    "elliptic": {"max_rp": "max_rp", "max_d": "max_d"},
    "theorem12": {"count": "count", "max_degree": "max_degree"},
    "rp-oracle": {"count": "count", "max_pole": "max_pole", "oracle_bound": "bound"},
}


class Command(WittSumCommand):
    help = "Runs a family of instances against its bound, fails when a single instance violates it"

    def add_command_arguments(self, parser):
        parser.add_argument("family", choices=sorted(FAMILIES), help="""Family of instances""")
        group = parser.add_argument_group("family")
        group.add_argument(
            "--ring",
            dest="ring",
            metavar="p,l,m",
            help="""Characteristic, Witt length and residue degree (default: the family's own)""",
        )
        group.add_argument(
            "--curve",
            dest="curve",
            default=None,
            help="""Weierstrass model E:a1,a2,a3,a4,a6 of the elliptic family (default: y^2+y=x^3)""",
        )
        group.add_argument("--degs", dest="degs", metavar="DEG,...", help="""Maximal component degrees (kumar)""")
        group.add_argument("--max-a", dest="max_a", type=int, help="""Largest exponent of f_0 (thm31)""")
        group.add_argument("--max-b", dest="max_b", type=int, help="""Largest exponent of f_1 (thm31)""")
        group.add_argument("--max-d", dest="max_d", type=int, help="""Largest extension degree""")
        group.add_argument("--max-rp", dest="max_rp", type=int, help="""Largest reduced pole order (elliptic)""")
        group.add_argument("--count", dest="count", type=int, help="""Number of random instances""")
        group.add_argument("--max-degree", dest="max_degree", type=int, help="""Largest degree (theorem12)""")
        group.add_argument("--max-pole", dest="max_pole", type=int, help="""Largest pole order (rp-oracle)""")
        group.add_argument(
            "--oracle-bound",
            dest="oracle_bound",
            type=int,
            help="""Largest witness pole order searched (rp-oracle)""",
        )

    def sweep_options(self, config):
        family = config["family"]
        options = {}
        for option, keyword in FAMILY_OPTIONS[family].items():
            value = config[option]
            if value is None:
                continue
            options[keyword] = tuple(parse_int_list(value)) if option == "degs" else value
        if family in ("theorem12", "rp-oracle"):
            options["seed"] = config.seed

        if family == "elliptic":
            p, l, m = config.ring or (2, 2, 1)
            descriptor = parse_curve(config.curve or DEFAULT_ELLIPTIC_CURVE, get_field(p, m))
            if descriptor.genus != 1:
                raise ParameterError("the elliptic family needs a Weierstrass model, not %s" % config.curve)
            options.update(field=descriptor, l=l)
        elif config.ring is not None:
            if family == "rp-oracle":
                raise ParameterError("the rp-oracle family runs over F_2 only")
            options.update(zip(("p", "l", "m"), config.ring))
        return options

    def run(self, config):
        family = config["family"]
        sweep = verify_sweep(family, **self.sweep_options(config))
        return Output(
            reports.sweep_document(sweep), reports.SWEEP_HEADER, reports.sweep_rows(sweep),
            failed=not sweep.passed, message="%d violations in the %s family" % (len(sweep.violations), family)
        )
