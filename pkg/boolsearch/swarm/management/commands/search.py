from django.core.management.base import BaseCommand

from boolfun.utils.commands import add_output_arguments, exit_codes, report_stream
from boolfun.utils.config import load_config
from boolfun.utils.reports import ReportWriter
from swarm.utils.campaign import run_search_campaign


def add_search_arguments(parser):
    parser.add_argument("--n", help="Number of variables: 7, 7-9 or 7,9")
    parser.add_argument("--fitness", choices=["fit1", "fit2", "fit3"])
    parser.add_argument("--runs", type=int, help="Independent runs per n")
    parser.add_argument("--seed", type=int, help="Master seed; run i uses seed + i")
    parser.add_argument("--seeds", type=int, nargs="+", help="Explicit per-run seeds")
    parser.add_argument("--particles", type=int, help="Swarm size")
    parser.add_argument("--iterations", type=int)
    parser.add_argument("--hc-budget", type=int, help="Hill-climb swaps per particle per iteration")
    parser.add_argument("--params", help="Velocity parameters w,phi,psi,vmax")
    parser.add_argument("--shared-r", action="store_true", default=None,
                        help="Draw a single random number per velocity update")
    parser.add_argument("--workers", type=int, help="Parallel runs")
    parser.add_argument("--record", action="store_true", default=None,
                        help="Store every run in the database")


SEARCH_OPTIONS = (
    "n", "fitness", "runs", "seed", "seeds", "particles", "iterations", "hc_budget",
    "params", "shared_r", "workers", "record", "out", "format", "timings",
)


class Command(BaseCommand):
    help = "Run seeded swarm searches for balanced Boolean functions and report the best found"

    def add_arguments(self, parser):
        add_search_arguments(parser)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        with exit_codes():
            overrides = {name: options.get(name) for name in SEARCH_OPTIONS}
            config = load_config(options["config"], mode="search", **overrides)
            with report_stream(config.out, self.stdout) as stream:
                run_search_campaign(config, ReportWriter(stream, config.format))
