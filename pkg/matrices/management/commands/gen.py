import logging
from pathlib import Path

from django.core.management.base import CommandError

from ...conf import resolve
from ...gen import sample_assr, scale_perturb
from ...matrixio import MatrixFormat, serialize
from ..base import MatrixCommand

logger = logging.getLogger(__name__)


class Command(MatrixCommand):
    help = (
        "Generate matrices: 'sample' draws ASSR matrices of a given order, "
        "'perturb' rescales a matrix file by random positive diagonals D A E."
    )

    def add_arguments(self, parser):
        parser.add_argument("mode", choices=["sample", "perturb"])
        parser.add_argument("path", nargs="?", help="Matrix file for 'perturb'.")
        parser.add_argument("--order", type=int, default=4, help="Order for 'sample'.")
        parser.add_argument("--seed", type=int, help="Seed (ASSRKIT_SEED).")
        parser.add_argument("--trials", type=int, help="Candidates drawn by 'sample'.")
        parser.add_argument(
            "--entry-range", type=int, help="Entries are drawn from 1..R in magnitude."
        )
        parser.add_argument("--output-dir", help="Write one file per matrix here.")
        super().add_arguments(parser)

    def run(self, *args, **options):
        seed = resolve("SEED", options["seed"])
        if options["mode"] == "perturb":
            if not options["path"]:
                raise CommandError("'perturb' needs a matrix file")
            matrices = [scale_perturb(self.load(options["path"]), seed)]
        else:
            matrices = sample_assr(
                options["order"],
                trials=options["trials"],
                seed=seed,
                entry_range=options["entry_range"],
            )
        fmt = MatrixFormat.JSON if options["json"] else MatrixFormat.PLAIN_TEXT
        suffix = ".json" if options["json"] else ".txt"
        if options["output_dir"]:
            out = Path(options["output_dir"])
            out.mkdir(parents=True, exist_ok=True)
            for index, a in enumerate(matrices, start=1):
                target = out / f"{options['mode']}-{index:03d}{suffix}"
                target.write_text(serialize(a, fmt))
                logger.info("wrote %s", target)
                self.stdout.write(str(target))
            return
        for index, a in enumerate(matrices, start=1):
            if fmt is MatrixFormat.PLAIN_TEXT:
                self.stdout.write(f"# {options['mode']} {index} (seed {seed})")
            self.stdout.write(serialize(a, fmt))
