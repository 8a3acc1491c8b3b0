from pathlib import Path

from ...classify import classify
from ...reports import Report
from ..base import MatrixCommand


class Command(MatrixCommand):
    help = "Classify a matrix as SR, SSR and ASSR, with signature, staircase type and irreducibility."

    def add_arguments(self, parser):
        parser.add_argument("path", help="Matrix file (plain text or JSON).")
        super().add_arguments(parser)

    def run(self, *args, **options):
        a = self.load(options["path"])
        timing = self.timing(options)
        with timing.section("classify"):
            result = classify(a, max_order=options["max_order"])
        report = Report(
            input_name=Path(options["path"]).name,
            matrix=a,
            classification=result,
            timing=timing.as_dict(),
        )
        self.emit(report, options)
