"""
Batch analysis of a truth-table file: one hex table per line, one report per
table, in file order.
"""
import logging
from typing import Iterator, Tuple

from .config import CampaignConfig
from .errors import TruthTableFormatError
from .properties import bound_violations, property_report
from .reports import ReportWriter, analysis_record
from .spectra import anf_to_string, mobius_transform
from .truth_table import BooleanFunction, parse_truth_table

logger = logging.getLogger(__name__)


def read_tables(path) -> Iterator[Tuple[int, BooleanFunction]]:
    """Yield (line number, function); blank lines are skipped."""
    with open(path, "rb") as handle:
        for number, raw in enumerate(handle, start=1):
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError:
                raise TruthTableFormatError("not valid UTF-8 text", number) from None
            if not text.strip():
                continue
            yield number, parse_truth_table(text, line=number)


def analyze_file(config: CampaignConfig, writer: ReportWriter) -> int:
    for number, f in read_tables(config.input):
        k_max, l_max = min(config.k_max, f.n), min(config.l_max, f.n)
        report = property_report(f, k_max, l_max)
        for finding in bound_violations(report):
            logger.warning("line %d violates %s: %s", number, finding.bound, finding.detail)
        anf = anf_to_string(mobius_transform(f)) if config.anf else None
        writer.write(analysis_record(report, f.to_hex(), config.k_max, config.l_max, line=number, anf=anf))
    logger.info("analyzed %d truth tables from %s", writer.count, config.input)
    return writer.count
