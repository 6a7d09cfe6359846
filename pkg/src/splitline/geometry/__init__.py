# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Normal bundle pipelines for curves in projective space and on Fano hypersurfaces"""

from .assembly import fan_assembly_d_eq_n, fang_assembly, restricted_cokernel
from .normal import (
    Case2Components,
    UnionComponents,
    blowup_modification,
    nodal_union_restriction,
    pn_case2_components,
    pn_normal,
    pn_pipeline,
    pn_union_components,
    rational_normal_pipeline,
    span_normal,
)
from .record import Assumption, PipelineRecord, Stage

__all__ = [
    "Assumption",
    "Case2Components",
    "PipelineRecord",
    "Stage",
    "UnionComponents",
    "blowup_modification",
    "fan_assembly_d_eq_n",
    "fang_assembly",
    "nodal_union_restriction",
    "pn_case2_components",
    "pn_normal",
    "pn_pipeline",
    "pn_union_components",
    "rational_normal_pipeline",
    "restricted_cokernel",
    "span_normal",
]
