import logging
from pathlib import Path

from rest_framework.renderers import JSONRenderer

from ...fixtures import reference_fixtures
from ...matrixio import MatrixFormat, serialize, serialize_text
from ...serializers import FixtureSerializer
from ..base import MatrixCommand

logger = logging.getLogger(__name__)


class Command(MatrixCommand):
    help = "Write the reference matrices A1..A6 and their expected-facts sidecars."

    def add_arguments(self, parser):
        parser.add_argument(
            "--output-dir", default="fixtures", help="Target directory (default: fixtures)."
        )
        parser.add_argument(
            "--json", action="store_true", help="Write matrices as JSON instead of text."
        )

    def run(self, *args, **options):
        out = Path(options["output_dir"])
        out.mkdir(parents=True, exist_ok=True)
        for fixture in reference_fixtures():
            if options["json"]:
                target = out / f"{fixture.id}.json"
                target.write_text(serialize(fixture.matrix, MatrixFormat.JSON))
            else:
                target = out / f"{fixture.id}.txt"
                comments = [f"fixture {fixture.id}"]
                if fixture.note:
                    comments.append(fixture.note)
                target.write_text(serialize_text(fixture.matrix, comments))
            sidecar = out / f"{fixture.id}.facts.json"
            sidecar.write_bytes(
                JSONRenderer().render(
                    FixtureSerializer(fixture).data, renderer_context={"indent": 2}
                )
                + b"\n"
            )
            logger.info("wrote %s and %s", target, sidecar)
            self.stdout.write(str(target))
