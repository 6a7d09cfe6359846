# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Partitions of splitting types and their elementary modifications.

A splitting type is encoded as a partition :math:`\Pi(E)`: blocks of heights
:math:`d_1 > \dots > d_s` (the distinct degrees) and widths :math:`r_i` (their
multiplicities), so that :math:`E \simeq \bigoplus r_i \mathcal{O}(d_i)`. Heights may be
negative. Partitions of the same width are ordered lexicographically by their expanded
column heights, i.e. by the sorted degree sequence.

The elementary modification :math:`M_k(\Pi)` shifts the degree by :math:`k`.
:math:`M_1` raises a lowest column by one, :math:`M_{-1}` lowers a highest column by one,
and :math:`M_k` iterates these. For :math:`k > 0` the result is the lexicographically
smallest partition of degree :math:`\deg \Pi + k` containing :math:`\Pi`; for :math:`k < 0`
it is the smallest one contained in :math:`\Pi`.
"""

import functools
import itertools
from dataclasses import dataclass

from ..exceptions import InvalidInputError
from .split_type import SplitType

__all__ = [
    "Partition",
    "modify_partition",
    "partition_of",
    "split_of",
]


@functools.total_ordering
@dataclass(frozen=True)
class Partition:
    """Block form of a splitting type.

    Args:
        blocks: Pairs ``(height, width)`` with strictly decreasing heights and positive
            widths

    Raises:
        InvalidInputError: if the blocks are empty, heights are not strictly decreasing,
            or a width is not positive
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(h), int(w)) for h, w in self.blocks)
        if not blocks:
            raise InvalidInputError("A partition needs at least one block")
        if any(w <= 0 for _, w in blocks):
            raise InvalidInputError(f"Block widths must be positive, got {blocks}")
        heights = [h for h, _ in blocks]
        if any(a <= b for a, b in itertools.pairwise(heights)):
            raise InvalidInputError(f"Block heights must be strictly decreasing, got {blocks}")

        object.__setattr__(self, "blocks", blocks)

    @property
    def width(self) -> int:
        return sum(w for _, w in self.blocks)

    @property
    def degree(self) -> int:
        return sum(h * w for h, w in self.blocks)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column heights, i.e. the non-increasing degree sequence"""
        return tuple(h for h, w in self.blocks for _ in range(w))

    def contains(self, other: "Partition") -> bool:
        """Whether every column of ``self`` is at least as high as that of ``other``"""
        if self.width != other.width:
            return False
        return all(a >= b for a, b in zip(self.columns, other.columns, strict=True))

    def __lt__(self, other: "Partition") -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.columns < other.columns


def partition_of(split: SplitType) -> Partition:
    """The partition :math:`\\Pi(E)` of a splitting type.

    Examples:
    >>> partition_of(SplitType((1, 1, 0))).blocks
    ((1, 2), (0, 1))
    """
    return Partition(tuple((h, len(list(g))) for h, g in itertools.groupby(split.degrees)))


def split_of(partition: Partition) -> SplitType:
    """The splitting type with partition ``partition``"""
    return SplitType(partition.columns)


def modify_partition(partition: Partition, k: int) -> Partition:
    """The elementary modification :math:`M_k(\\Pi)`.

    Args:
        partition: The partition :math:`\\Pi`

        k: Type of the modification; the degree changes by ``k``

    Returns:
        The modified partition, of the same width

    Examples:
    >>> modify_partition(partition_of(SplitType((0, 0, 0))), 2).columns
    (1, 1, 0)
    >>> modify_partition(partition_of(SplitType((2, 1))), -3).columns
    (0, 0)
    """
    columns = list(partition.columns)

    for _ in range(abs(k)):
        if k > 0:
            # the leftmost lowest column keeps the sequence sorted
            i = columns.index(columns[-1])
            columns[i] += 1
        else:
            i = len(columns) - 1 - columns[::-1].index(columns[0])
            columns[i] -= 1

    return partition_of(SplitType(tuple(columns)))
