# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Ground truth by exact linear algebra.

Bundles on :math:`\mathbb{P}^1` and on rational trees are written down explicitly as
polynomial or transition-matrix data over an exact field, and their splitting types and
cohomology are read off from ranks of section maps. Every "general" choice is drawn from a
seeded generator. Morphisms, gluings and modification quotients are certified before use;
extension classes are compared across independent draws.
"""

from .extension import TransitionBundle, extension_splitting, random_extension
from .field import DEFAULT_PRIME, ExactField
from .modification import ModificationPoint, modification_splitting
from .morphism import PolyMorphism, general_morphism, kernel_splitting, section_matrix
from .profile import h0_window, splitting_from_h0_function, splitting_from_h0_profile
from .tree import (
    TreeBundleData,
    TreeCohomology,
    TreeNode,
    end_tree,
    general_gluing,
    tree_cohomology,
    tree_data_from_comb,
)

__all__ = [
    "DEFAULT_PRIME",
    "ExactField",
    "ModificationPoint",
    "PolyMorphism",
    "TransitionBundle",
    "TreeBundleData",
    "TreeCohomology",
    "TreeNode",
    "end_tree",
    "extension_splitting",
    "general_gluing",
    "general_morphism",
    "h0_window",
    "kernel_splitting",
    "modification_splitting",
    "random_extension",
    "section_matrix",
    "splitting_from_h0_function",
    "splitting_from_h0_profile",
    "tree_cohomology",
    "tree_data_from_comb",
]
