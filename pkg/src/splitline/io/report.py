# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Serialized reports of pipelines and tables"""

import csv
import io
import json
from collections.abc import Mapping
from typing import Any

from ..interp import InterpTable

__all__ = ["REPORT_SCHEMA_VERSION", "TABLE_COLUMNS", "report_json", "table_csv", "table_to_dict"]

REPORT_SCHEMA_VERSION = 1

TABLE_COLUMNS = ("n", "d", "e", "q_max", "point_minimal", "accessible", "e0", "interpolating")


def report_json(kind: str, payload: Mapping[str, Any]) -> str:
    """Renders a versioned JSON report.

    Examples:
    >>> print(report_json("pn", {"predicted": [5, 5]}))
    {
      "schema_version": 1,
      "kind": "pn",
      "predicted": [
        5,
        5
      ]
    }
    """
    document = {"schema_version": REPORT_SCHEMA_VERSION, "kind": kind, **payload}
    return json.dumps(document, indent=2)


def table_to_dict(table: InterpTable) -> dict[str, Any]:
    """A JSON-compatible view of an interpolation table"""
    return {
        "n": table.n,
        "d": table.d,
        "modulus": table.modulus,
        "q_modulus": table.q_modulus,
        "period": table.period,
        "accessible_residues": list(table.accessible_residues),
        "interpolating_residues": list(table.interpolating_residues),
        "interpolating_q_residues": list(table.interpolating_q_residues),
        "class_count": table.class_count,
        "expected_class_count": table.expected_class_count,
        "interpolating_class_count": table.interpolating_class_count,
        "expected_interpolating_class_count": str(table.expected_interpolating_class_count),
        "interpolating_q": list(table.interpolating_q),
        "rows": [row._asdict() for row in table.rows],
    }


def table_csv(table: InterpTable) -> str:
    """Renders the rows of a table as CSV with the fixed :data:`TABLE_COLUMNS` header.

    Flags are written as ``0``/``1`` and a missing witness as an empty field.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in table.rows:
        writer.writerow(
            [
                row.n,
                row.d,
                row.e,
                row.q_max,
                int(row.point_minimal),
                int(row.accessible),
                "" if row.e0 is None else row.e0,
                int(row.interpolating),
            ]
        )
    return buffer.getvalue()
