from django.core.management.base import BaseCommand, CommandError

from ..exceptions import EXIT_PARSE_ERROR, MatrixError
from ..matrixio import load_matrix
from ..reports import Timing, render_json, render_text


class MatrixCommand(BaseCommand):
    """
    Shared options and error mapping for the matrix commands. Subclasses
    implement ``run`` instead of ``handle``.
    """

    def add_arguments(self, parser):
        parser.add_argument("--json", action="store_true", help="Emit a JSON report.")
        parser.add_argument(
            "--max-order",
            type=int,
            help="Largest order for exhaustive minor enumeration (ASSRKIT_MAX_ORDER).",
        )
        parser.add_argument(
            "--digits", type=int, help="Significant digits of rendered decimals."
        )
        parser.add_argument(
            "--scale-exponent",
            type=int,
            help="Print decimals in units of 10**k with a '1.0e+0k *' header.",
        )
        parser.add_argument(
            "--timing", action="store_true", help="Record wall-clock timings."
        )

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except MatrixError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

    def run(self, *args, **options):
        raise NotImplementedError

    def load(self, path):
        try:
            return load_matrix(path)
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc}", returncode=EXIT_PARSE_ERROR)

    def timing(self, options):
        return Timing(enabled=options["timing"])

    def emit(self, reports, options):
        if options["json"]:
            output = render_json(
                reports,
                digits=options["digits"],
                scale_exponent=options["scale_exponent"],
            )
        else:
            many = reports if isinstance(reports, list) else [reports]
            output = "\n".join(
                render_text(r, options["digits"], options["scale_exponent"])
                for r in many
            )
        self.stdout.write(output, ending="")
