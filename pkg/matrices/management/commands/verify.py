from pathlib import Path

from django.core.management.base import CommandError

from ...classify import classify
from ...conf import resolve
from ...exceptions import EXIT_CHECK_FAILED
from ...fixtures import reference_fixtures
from ...gen import sample_assr
from ...reports import Report
from ...theorems import VerifyConfig, run_all_checks
from ..base import MatrixCommand


class Command(MatrixCommand):
    help = (
        "Run every theorem check on a matrix file, the reference fixtures or "
        "randomly sampled ASSR matrices. Exits with status 5 if any check fails."
    )

    def add_arguments(self, parser):
        parser.add_argument("path", nargs="?", help="Matrix file (plain text or JSON).")
        parser.add_argument(
            "--fixtures", action="store_true", help="Verify the reference fixtures A1..A6."
        )
        parser.add_argument(
            "--random", action="store_true", help="Verify sampled ASSR matrices."
        )
        parser.add_argument(
            "--order", type=int, default=4, help="Order of sampled matrices."
        )
        parser.add_argument("--seed", type=int, help="Seed (ASSRKIT_SEED).")
        parser.add_argument(
            "--trials", type=int, help="Random trials per check and sampled candidates."
        )
        super().add_arguments(parser)

    def inputs(self, options):
        if options["path"]:
            yield Path(options["path"]).name, self.load(options["path"])
        if options["fixtures"]:
            for fixture in reference_fixtures():
                yield fixture.id, fixture.matrix
        if options["random"]:
            seed = resolve("SEED", options["seed"])
            samples = sample_assr(options["order"], trials=options["trials"], seed=seed)
            for index, a in enumerate(samples, start=1):
                yield f"random-n{options['order']}-seed{seed}-{index}", a

    def run(self, *args, **options):
        if not (options["path"] or options["fixtures"] or options["random"]):
            raise CommandError("give a matrix file, --fixtures or --random")
        config = VerifyConfig(
            seed=options["seed"],
            trials=options["trials"],
            max_order=options["max_order"],
        )
        reports = []
        for name, a in self.inputs(options):
            timing = self.timing(options)
            with timing.section("classify"):
                classification = classify(a, max_order=config.max_order)
            with timing.section("verify"):
                checks = run_all_checks(a, config)
            reports.append(
                Report(
                    input_name=name,
                    matrix=a,
                    classification=classification,
                    checks=checks,
                    timing=timing.as_dict(),
                )
            )
        self.emit(reports, options)
        failed = [
            f"{r.input_name}:{c.check_id}" for r in reports for c in r.failed_checks
        ]
        if failed:
            raise CommandError(
                f"{len(failed)} check(s) failed: {', '.join(failed)}",
                returncode=EXIT_CHECK_FAILED,
            )
