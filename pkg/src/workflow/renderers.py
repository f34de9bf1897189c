"""
Report renderers: human-readable table, JSON and CSV series
"""

import csv
import io
import json
from typing import Any, List

from models.errors import InputError
from models.report import Report

CSV_HEADER = ("n", "ld_num", "ld_den")


class ReportRenderer:
    """Utility class turning a Report into deterministic text"""

    @staticmethod
    def render(report: Report, output_format: str = "table") -> str:
        if output_format == "json":
            return ReportRenderer.to_json(report)
        if output_format == "csv":
            return ReportRenderer.to_csv(report)
        return ReportRenderer.to_table(report)

    @staticmethod
    def to_json(report: Report) -> str:
        payload = report.model_dump(mode="json")
        for optional in ("series", "timing"):
            if payload.get(optional) is None:
                payload.pop(optional, None)
        return json.dumps(payload, indent=2)

    @staticmethod
    def to_csv(report: Report) -> str:
        if report.series is None:
            raise InputError(f"{report.command} produces no series; --csv applies to asym and puiseux --series")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for n, ld in report.series:
            if ld is None:
                writer.writerow((n, "", ""))
                continue
            num, den = ld.split("/")
            writer.writerow((n, num, den))
        return buffer.getvalue().rstrip("\n")

    @staticmethod
    def _format_value(value: Any) -> str:
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, list):
            return "{" + ", ".join(ReportRenderer._format_value(v) for v in value) + "}"
        return str(value)

    @staticmethod
    def to_table(report: Report) -> str:
        lines: List[str] = [
            f"command: {report.command}",
            f"input:   {report.input}",
            f"monoid:  {report.monoid}",
        ]
        width = max((len(key) for key in report.results), default=0)
        for key, value in report.results.items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"  {key}:")
                for row in value:
                    cells = "  ".join(f"{k}={ReportRenderer._format_value(v)}" for k, v in row.items())
                    lines.append(f"    {cells}")
                continue
            lines.append(f"  {key.ljust(width)}  {ReportRenderer._format_value(value)}")
        flags = report.flags
        lines.append(
            f"complete: {ReportRenderer._format_value(flags.complete)}  "
            f"under-approximation: {ReportRenderer._format_value(flags.under_approximation)}"
        )
        if report.timing is not None:
            lines.append(f"time: {report.timing:.6f}s")
        return "\n".join(lines)
