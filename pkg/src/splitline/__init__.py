# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause

r"""splitline is a library for computing with balanced vector bundles on rational curves."""


# ruff: noqa: F401

from splitline import geometry, interp, io, oracle, splitcalc, treebundle
from splitline.exceptions import (
    AccessibilityError,
    ConsistencyError,
    DegenerateDenominatorError,
    GenericityError,
    HypothesisError,
    InsufficientWindowError,
    InvalidInputError,
    PreconditionError,
    SplitlineError,
)
from splitline.geometry import (
    Assumption,
    PipelineRecord,
    fan_assembly_d_eq_n,
    fang_assembly,
    pn_normal,
    pn_pipeline,
    rational_normal_pipeline,
)
from splitline.interp import (
    InterpTable,
    e_min,
    example_family_degrees,
    interp_table,
    is_accessible,
    is_point_minimal,
    q_max,
)
from splitline.io import read_comb, write_comb
from splitline.oracle import (
    ExactField,
    ModificationPoint,
    TreeBundleData,
    end_tree,
    extension_splitting,
    general_morphism,
    kernel_splitting,
    modification_splitting,
    splitting_from_h0_profile,
    tree_cohomology,
    tree_data_from_comb,
)
from splitline.splitcalc import *  # noqa: F403
from splitline.treebundle import (
    CombSpec,
    ToothNode,
    assemble_comb,
    build_comb,
    smoothing_reduce,
)
from splitline.verify import CheckResult, run_suite

from ._version import __version__
