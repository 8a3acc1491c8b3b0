from pathlib import Path

from ...combined import combined, combined_via_inverse
from ...reports import Report
from ..base import MatrixCommand


class Command(MatrixCommand):
    help = "Compute the combined matrix C(A) exactly, with decimals and row/column sums."

    def add_arguments(self, parser):
        parser.add_argument("path", help="Matrix file (plain text or JSON).")
        parser.add_argument(
            "--route",
            choices=["cofactor", "inverse"],
            default="cofactor",
            help="Cofactor formula (default) or Hadamard product with the inverse.",
        )
        super().add_arguments(parser)

    def run(self, *args, **options):
        a = self.load(options["path"])
        timing = self.timing(options)
        with timing.section("combined"):
            if options["route"] == "inverse":
                result = combined_via_inverse(a)
            else:
                result = combined(a)
        report = Report(
            input_name=Path(options["path"]).name,
            matrix=a,
            combined=result,
            timing=timing.as_dict(),
        )
        self.emit(report, options)
