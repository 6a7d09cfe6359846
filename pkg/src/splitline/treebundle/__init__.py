# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Broken combs and the prediction of their smoothings"""

from .comb import (
    CombSpec,
    Component,
    Edge,
    GluingMode,
    Role,
    ToothNode,
    assemble_comb,
    build_comb,
)
from .reduce import (
    ReductionResult,
    ReductionStep,
    RootReduction,
    comb_is_balanced_smoothing,
    contract_onto,
    smoothing_reduce,
)

__all__ = [
    "CombSpec",
    "Component",
    "Edge",
    "GluingMode",
    "ReductionResult",
    "ReductionStep",
    "Role",
    "RootReduction",
    "ToothNode",
    "assemble_comb",
    "build_comb",
    "comb_is_balanced_smoothing",
    "contract_onto",
    "smoothing_reduce",
]
