"""Report documents and table emission shared by the CLI commands.

A report is a plain dict: {schema_version, config, provenance, columns,
results}.  JSON output carries the full document; CSV output carries the
results table only (header row first, one record per grid point).  Floats
are printed in shortest-exact decimal form, so CSV and JSON carry
bit-identical values and nothing is lost to truncation.
"""

from __future__ import annotations

import io
import json
import sys
from datetime import datetime, timezone
from decimal import ROUND_HALF_UP, Decimal

from . import __version__

SCHEMA_VERSION = "1"


def make_provenance(seed=None) -> dict:
    return {
        "code_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "seed": seed,
    }


def make_report(config: dict, columns, results, seed=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config,
        "provenance": make_provenance(seed),
        "columns": list(columns),
        "results": results,
    }


def round_two_decimals(x: float) -> float:
    """Round half away from zero to two decimals (table-comparison column)."""
    return float(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    columns = report["columns"]
    buf.write(",".join(columns) + "\n")
    for row in report["results"]:
        buf.write(",".join(_format_cell(row.get(c)) for c in columns) + "\n")
    return buf.getvalue()


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def emit(report: dict, out_path=None, fmt: str = "csv") -> None:
    text = render_csv(report) if fmt == "csv" else render_json(report)
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
