from django.core.management.base import BaseCommand

from boolfun.utils.commands import add_output_arguments, exit_codes, report_stream
from boolfun.utils.config import load_config
from boolfun.utils.reports import ReportWriter
from swarm.management.commands.search import add_search_arguments
from tuning.utils.campaign import run_meta_campaign

META_OPTIONS = (
    "n", "fitness", "runs", "seed", "particles", "iterations", "hc_budget", "workers",
    "record", "meta", "meta_runs", "out", "format", "timings",
)


class Command(BaseCommand):
    help = "Tune the swarm velocity parameters with LUS or a continuous GA"

    def add_arguments(self, parser):
        add_search_arguments(parser)
        parser.add_argument("--meta", choices=["lus", "cga"], help="Meta-optimizer")
        parser.add_argument("--meta-runs", type=int, help="Independent meta-optimization runs")
        add_output_arguments(parser)

    def handle(self, *args, **options):
        with exit_codes():
            overrides = {name: options.get(name) for name in META_OPTIONS}
            ignored = [name for name in ("seeds", "params", "shared_r") if options.get(name)]
            if ignored:
                self.stderr.write(f"ignored by meta: {', '.join(ignored)}")
            config = load_config(options["config"], mode="meta", **overrides)
            with report_stream(config.out, self.stdout) as stream:
                run_meta_campaign(config, ReportWriter(stream, config.format))
