# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""File formats for combs, pipeline reports and interpolation tables"""

from .comb_file import COMB_SCHEMA_VERSION, comb_from_dict, comb_to_dict, read_comb, write_comb
from .report import REPORT_SCHEMA_VERSION, TABLE_COLUMNS, report_json, table_csv, table_to_dict

__all__ = [
    "COMB_SCHEMA_VERSION",
    "REPORT_SCHEMA_VERSION",
    "TABLE_COLUMNS",
    "comb_from_dict",
    "comb_to_dict",
    "read_comb",
    "report_json",
    "table_csv",
    "table_to_dict",
    "write_comb",
]
