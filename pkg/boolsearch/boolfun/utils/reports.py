"""
Report serialization: JSON Lines records or CSV blocks.

A CSV stream starts a new header block whenever the record fields change, so
per-run rows and summary rows can share one file.
"""
import csv
import json
from typing import IO, Optional, Sequence

from .properties import PropertyReport


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value)
    return value


class ReportWriter:
    def __init__(self, stream: IO[str], fmt: str = "json"):
        if fmt not in ("json", "csv"):
            raise ValueError(f"unknown report format {fmt!r}")
        self.stream = stream
        self.fmt = fmt
        self._fields: Optional[Sequence[str]] = None
        self._csv = None
        self.count = 0

    def write(self, record: dict) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(record) + "\n")
        else:
            fields = list(record)
            if fields != self._fields:
                if self._fields is not None:
                    self.stream.write("\n")
                self._fields = fields
                self._csv = csv.DictWriter(self.stream, fieldnames=fields, lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow({key: _cell(value) for key, value in record.items()})
        self.count += 1
        self.stream.flush()


def analysis_record(report: PropertyReport, table_hex: str, k_max: int, l_max: int,
                    line: Optional[int] = None, anf: Optional[str] = None) -> dict:
    """Flat record with a fixed column set regardless of n."""
    base = report.as_record()
    record = {}
    if line is not None:
        record["line"] = line
    record["table"] = table_hex
    for key in ("n", "balanced", "nl", "deg"):
        record[key] = base[key]
    for k in range(1, k_max + 1):
        record[f"cidev_{k}"] = report.cidev.get(k)
    for l in range(1, l_max + 1):
        record[f"pcdev_{l}"] = report.pcdev.get(l)
    for key in ("ac_max", "resiliency", "pc_order"):
        record[key] = base[key]
    if anf is not None:
        record["anf"] = anf
    return record
