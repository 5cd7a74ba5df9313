"""
Glue shared by the management commands: error-to-exit-code translation and
the report destination.
"""
from contextlib import contextmanager

from django.core.management.base import CommandError

from .errors import BoolFunError, ConfigError

CONFIG_ERROR = 2
INPUT_ERROR = 3


@contextmanager
def exit_codes():
    try:
        yield
    except ConfigError as exc:
        raise CommandError(f"configuration error: {exc}", returncode=CONFIG_ERROR) from exc
    except BoolFunError as exc:
        raise CommandError(f"input error: {exc}", returncode=INPUT_ERROR) from exc


@contextmanager
def report_stream(out, stdout):
    """The --out file, or the command's stdout."""
    if out is None:
        yield stdout
        return
    try:
        handle = open(out, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise ConfigError(f"cannot write report to {out}: {exc}") from exc
    with handle:
        yield handle


def add_output_arguments(parser):
    parser.add_argument("--config", help="YAML campaign config; flags override it")
    parser.add_argument("--out", help="Report file (default: stdout)")
    parser.add_argument("--format", choices=["json", "csv"], help="Report format")
    parser.add_argument(
        "--no-timings", dest="timings", action="store_false", default=None,
        help="Leave wall-time fields out so repeated runs produce identical reports",
    )
