from django.core.management.base import BaseCommand, CommandError

from boolfun.utils.analysis import analyze_file
from boolfun.utils.commands import INPUT_ERROR, add_output_arguments, exit_codes, report_stream
from boolfun.utils.config import load_config
from boolfun.utils.errors import ConfigError
from boolfun.utils.reports import ReportWriter
from swarm.utils.campaign import run_search_campaign
from tuning.utils.campaign import run_meta_campaign

RUNNERS = {
    "analyze": analyze_file,
    "search": run_search_campaign,
    "meta": run_meta_campaign,
}


class Command(BaseCommand):
    help = "Run the campaign described by a YAML config file"

    def add_arguments(self, parser):
        parser.add_argument("--mode", choices=sorted(RUNNERS), help="Override the mode in the file")
        add_output_arguments(parser)

    def handle(self, *args, **options):
        with exit_codes():
            if not options["config"]:
                raise ConfigError("campaign needs --config")
            config = load_config(
                options["config"],
                mode=options["mode"],
                out=options["out"],
                format=options["format"],
                timings=options["timings"],
            )
            with report_stream(config.out, self.stdout) as stream:
                try:
                    RUNNERS[config.mode](config, ReportWriter(stream, config.format))
                except OSError as exc:
                    raise CommandError(f"input error: {exc}", returncode=INPUT_ERROR) from exc
