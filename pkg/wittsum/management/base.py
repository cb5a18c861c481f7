"""Shared plumbing of the wittsum management commands.

Every command parses its options into a :class:`RunConfig`, runs, and renders
the returned document as JSON (or rows as CSV) on stdout or into ``--out``.
Library exceptions become :class:`CommandError` with the exit codes below.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from ..conf import setting
from ..exceptions import (
    DegenerateVectorError,
    ParameterError,
    ResourceCapError,
    WittSumError,
)
from ..rings.finite_fields import get_field
from ..utils import reports
from ..utils.parsing import parse_curve, parse_ring, parse_witt_function

# logger for this file
logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE_CAP = 3
EXIT_PRECONDITION = 4


class RunConfig(object):
    """Validated options of one invocation"""

    def __init__(self, options):
        self.options = dict(options)
        self.format = options.get("format") or "json"
        self.out = options.get("out")
        seed = options.get("seed")
        self.seed = setting("WITTSUM_DEFAULT_SEED") if seed is None else seed
        ring = options.get("ring")
        self.ring = parse_ring(ring) if ring else None
        self.curve = options.get("curve")

    def __getitem__(self, name):
        return self.options.get(name)

    def require(self, name):
        value = self.options.get(name)
        if value is None:
            raise ParameterError("the option --%s is required" % name.replace("_", "-"))
        return value

    @property
    def ring_parameters(self):
        if self.ring is None:
            raise ParameterError("the option --ring p,l,m is required")
        return self.ring


class Output(object):
    """What a command produces: a JSON document, and optionally CSV rows"""

    def __init__(self, document, header=None, rows=None, failed=False, message=None):
        self.document = document
        self.header = header
        self.rows = rows
        self.failed = failed
        self.message = message

    def render(self, fmt):
        if fmt == "csv":
            if self.rows is None:
                raise ParameterError("this command has no CSV output")
            return reports.csv_text(self.header, self.rows)
        return reports.dumps(self.document) + "\n"


class WittSumCommand(BaseCommand):
    """Base class of the commands, see :meth:`run`"""

    def add_arguments(self, parser):
        group = parser.add_argument_group("output")
        group.add_argument(
            "--format",
            dest="format",
            choices=("json", "csv"),
            default="json",
            help="""Output format (default: json)""",
        )
        group.add_argument(
            "--out",
            dest="out",
            metavar="PATH",
            default=None,
            help="""Writes the output into PATH instead of stdout""",
        )
        group.add_argument(
            "--seed",
            dest="seed",
            type=int,
            default=None,
            help="""Seed of the random families (default: the WITTSUM_DEFAULT_SEED setting)""",
        )
        self.add_command_arguments(parser)

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def add_command_arguments(self, parser):
        pass

    def run(self, config):
        """Returns an :class:`Output`"""
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = RunConfig(options)
            output = self.run(config)
            text = output.render(config.format)
        except ParameterError as error:
            raise CommandError(str(error), returncode=EXIT_USAGE)
        except ResourceCapError as error:
            raise CommandError(str(error), returncode=EXIT_RESOURCE_CAP)
        except DegenerateVectorError as error:
            raise CommandError(str(error), returncode=EXIT_PRECONDITION)
        except WittSumError as error:
            logger.error("[commands|%s] %s", self.command_name, error)
            raise CommandError(str(error), returncode=EXIT_FAILURE)
        except CommandError:
            raise
        except Exception as error:
            logger.exception("[commands|%s] unexpected error", self.command_name)
            raise CommandError("%s: %s" % (type(error).__name__, error), returncode=EXIT_FAILURE)

        if config.out:
            try:
                with open(config.out, "w") as stream:
                    stream.write(text)
            except OSError as error:
                raise CommandError("cannot write %s: %s" % (config.out, error), returncode=EXIT_FAILURE)
        else:
            self.stdout.write(text, ending="")
        if output.failed:
            raise CommandError(output.message or "verification failed", returncode=EXIT_FAILURE)


def curve_and_function(config, option="f_witt"):
    """The curve of ``--curve`` over F_{p^m} and the Witt function of ``--f-witt`` on it"""
    p, l, m = config.ring_parameters
    descriptor = parse_curve(config.curve, get_field(p, m))
    return descriptor, parse_witt_function(config.require(option), descriptor, l)


def add_witt_function_arguments(parser):
    group = parser.add_argument_group("witt function")
    group.add_argument(
        "--ring",
        dest="ring",
        metavar="p,l,m",
        help="""Characteristic, Witt length and residue degree""",
    )
    group.add_argument(
        "--f-witt",
        dest="f_witt",
        metavar="VECTOR",
        help="""Witt vector of functions, for example "(x^3, x)" or "(x*y, 1)" """,
    )
    group.add_argument(
        "--curve",
        dest="curve",
        default="P1",
        help="""P1 (default) or E:a1,a2,a3,a4,a6 for a Weierstrass model""",
    )
