# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Interpolation numerology of rational curves on Fano hypersurfaces"""

from .numerology import (
    Accessibility,
    e_min,
    is_accessible,
    is_point_minimal,
    q_max,
    remainder_criterion,
)
from .table import FamilyDegree, InterpRow, InterpTable, example_family_degrees, interp_table

__all__ = [
    "Accessibility",
    "FamilyDegree",
    "InterpRow",
    "InterpTable",
    "e_min",
    "example_family_degrees",
    "interp_table",
    "is_accessible",
    "is_point_minimal",
    "q_max",
    "remainder_criterion",
]
