from django.core.management.base import BaseCommand, CommandError

from boolfun.utils.analysis import analyze_file
from boolfun.utils.commands import INPUT_ERROR, add_output_arguments, exit_codes, report_stream
from boolfun.utils.config import load_config
from boolfun.utils.reports import ReportWriter


class Command(BaseCommand):
    help = "Report cryptographic properties of the hex truth tables in a file, one per line"

    def add_arguments(self, parser):
        parser.add_argument("input", nargs="?", help="Truth-table file, one hex table per line")
        parser.add_argument("--k-max", type=int, help="Highest correlation-immunity order reported")
        parser.add_argument("--l-max", type=int, help="Highest propagation order reported")
        parser.add_argument("--anf", action="store_true", default=None, help="Add the algebraic normal form")
        add_output_arguments(parser)

    def handle(self, *args, **options):
        with exit_codes():
            config = load_config(
                options["config"],
                mode="analyze",
                input=options["input"],
                k_max=options["k_max"],
                l_max=options["l_max"],
                anf=options["anf"],
                out=options["out"],
                format=options["format"],
            )
            with report_stream(config.out, self.stdout) as stream:
                writer = ReportWriter(stream, config.format)
                try:
                    analyze_file(config, writer)
                except OSError as exc:
                    raise CommandError(f"input error: {exc}", returncode=INPUT_ERROR) from exc
