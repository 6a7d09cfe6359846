# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Exact arithmetic of splitting types and partitions on :math:`\mathbb{P}^1`."""

from .partition import Partition, modify_partition, partition_of, split_of
from .rules import (
    Direction,
    balanced_extension,
    general_kernel,
    general_modification,
    point_modification,
)
from .split_type import (
    BalanceInfo,
    SplitType,
    balance_info,
    balanced_of,
    end_bundle,
    h1_vanishing_threshold,
    h_split,
    is_rigid,
    make_split,
    upper_subbundle,
)

__all__ = [
    "BalanceInfo",
    "Direction",
    "Partition",
    "SplitType",
    "balance_info",
    "balanced_extension",
    "balanced_of",
    "end_bundle",
    "general_kernel",
    "general_modification",
    "h1_vanishing_threshold",
    "h_split",
    "is_rigid",
    "make_split",
    "modify_partition",
    "partition_of",
    "point_modification",
    "split_of",
    "upper_subbundle",
]
