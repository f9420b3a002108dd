"""Analysis reports: per-unit records, JSON and CSV emission.

Reports are fully deterministic: records are sorted by (file, position in
file), numbers are exact, and no timestamps or ids appear anywhere, so the
same inputs and configuration produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

SCHEMA_VERSION = 1


def _number(value: Fraction):
    """Exact int when integral, float otherwise (for JSON/CSV)."""
    if value.denominator == 1:
        return int(value)
    return float(value)


@dataclass(frozen=True)
class UnitRecord:
    """One analyzed unit: a function of a .mini file or a whole .dot graph."""

    unit: str          # function or graph name
    source: str        # "file:unit" for functions, "file" for graphs
    file: str
    position: int      # order within the file, for stable sorting
    nu: int
    omega: Fraction
    provenance: str
    region: str
    indicator: Fraction

    def to_dict(self) -> dict:
        return {
            "unit": self.unit,
            "source": self.source,
            "nu": self.nu,
            "omega": _number(self.omega),
            "provenance": self.provenance,
            "region": self.region,
            "indicator": _number(self.indicator),
        }


@dataclass(frozen=True)
class AnalysisReport:
    records: Tuple[UnitRecord, ...]
    tool_version: str
    mode: str
    slope: Fraction

    @classmethod
    def build(cls, records: List[UnitRecord], tool_version: str, mode: str,
              slope: Fraction) -> "AnalysisReport":
        ordered = sorted(records, key=lambda r: (r.file, r.position))
        return cls(records=tuple(ordered), tool_version=tool_version,
                   mode=mode, slope=slope)

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "config": {"mode": self.mode, "slope": _number(self.slope)},
            "records": [r.to_dict() for r in self.records],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["schema_version", "unit", "source", "nu", "omega",
                         "provenance", "region", "indicator"])
        for r in self.records:
            d = r.to_dict()
            writer.writerow([SCHEMA_VERSION, d["unit"], d["source"], d["nu"],
                             d["omega"], d["provenance"], d["region"],
                             d["indicator"]])
        return out.getvalue()

    def max_indicator(self) -> Fraction:
        return max((r.indicator for r in self.records), default=Fraction(0))


def report_from_json(text: str) -> AnalysisReport:
    """Rehydrate a report (e.g. for plotting a previously saved analysis)."""
    doc = json.loads(text)
    records = []
    for i, rec in enumerate(doc["records"]):
        records.append(UnitRecord(
            unit=rec["unit"], source=rec["source"], file=rec["source"],
            position=i, nu=int(rec["nu"]),
            omega=Fraction(str(rec["omega"])),
            provenance=rec["provenance"], region=rec["region"],
            indicator=Fraction(str(rec["indicator"]))))
    return AnalysisReport(
        records=tuple(records),
        tool_version=doc.get("tool_version", ""),
        mode=doc.get("config", {}).get("mode", "exact"),
        slope=Fraction(str(doc.get("config", {}).get("slope", 2))))
