from ...asw.conductor import conductor, genus_of_cover
from ..base import Output, WittSumCommand, add_witt_function_arguments, curve_and_function


class Command(WittSumCommand):
    help = "Genus of the Artin-Schreier-Witt cover defined by a nondegenerate Witt function"

    def add_command_arguments(self, parser):
        add_witt_function_arguments(parser)

    def run(self, config):
        descriptor, f = curve_and_function(config)
        genus, degrees = genus_of_cover(f)
        document = {
            "f": str(f),
            "genus": genus,
            "base_genus": descriptor.genus,
            "conductor": conductor(f).as_dict(),
            "multiple_degrees": degrees,
        }
        rows = [[n, degree] for n, degree in enumerate(degrees, 1)]
        return Output(document, ["n", "conductor_degree"], rows)
