# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Splitting types of vector bundles on the projective line.

Every vector bundle on :math:`\mathbb{P}^1` is a direct sum of line bundles

.. math::

    E \simeq \mathcal{O}(a_1) \oplus \dots \oplus \mathcal{O}(a_r),
    \qquad a_1 \geq \dots \geq a_r

so a bundle is determined up to isomorphism by its multiset of degrees. A bundle is
*balanced* when :math:`a_1 - a_r \leq 1`; the summands of maximal degree :math:`a^+`
form the upper subbundle :math:`r^+\mathcal{O}(a^+)`.
"""

import operator
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..exceptions import InvalidInputError, PreconditionError

# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

__all__ = [
    "BalanceInfo",
    "SplitType",
    "balance_info",
    "balanced_of",
    "end_bundle",
    "h1_vanishing_threshold",
    "h_split",
    "is_rigid",
    "make_split",
    "upper_subbundle",
]


@dataclass(frozen=True)
class SplitType:
    r"""A direct sum of line bundles on :math:`\mathbb{P}^1`.

    The degrees are stored sorted non-increasing, whatever order they are given in.

    Args:
        degrees: The degrees :math:`a_i` of the line bundle summands

    Raises:
        InvalidInputError: if ``degrees`` is empty or holds non-integers

    Examples:
    >>> SplitType((0, 1, 1)).degrees
    (1, 1, 0)
    >>> str(SplitType((5, 5)))
    '(5,5)'
    """

    degrees: tuple[int, ...]

    def __post_init__(self):
        try:
            degrees = tuple(operator.index(a) for a in self.degrees)
        except TypeError as e:
            raise InvalidInputError(f"Degrees must be integers, got {self.degrees}") from e
        if not degrees:
            raise InvalidInputError("A splitting type needs at least one summand")

        object.__setattr__(self, "degrees", tuple(sorted(degrees, reverse=True)))

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.degrees) + ")"

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    @property
    def rank(self) -> int:
        """Number of line bundle summands"""
        return len(self.degrees)

    @property
    def c1(self) -> int:
        """Degree (first Chern class) of the bundle"""
        return sum(self.degrees)

    @property
    def slope(self) -> Fraction:
        """Exact slope ``c1 / rank``"""
        return Fraction(self.c1, self.rank)

    @property
    def slope_floor(self) -> int:
        return self.c1 // self.rank

    @property
    def max_degree(self) -> int:
        return self.degrees[0]

    @property
    def min_degree(self) -> int:
        return self.degrees[-1]

    @property
    def is_balanced(self) -> bool:
        return self.max_degree - self.min_degree <= 1

    def dual(self) -> "SplitType":
        """The dual bundle, with every degree negated"""
        return SplitType(tuple(-a for a in self.degrees))

    def twist(self, t: int) -> "SplitType":
        r"""The twist :math:`E(t) = E \otimes \mathcal{O}(t)`"""
        return SplitType(tuple(a + t for a in self.degrees))

    def direct_sum(self, other: "SplitType") -> "SplitType":
        return SplitType(self.degrees + other.degrees)


class BalanceInfo(NamedTuple):
    """Balancedness data of a splitting type"""

    balanced: bool
    upper_rank: int
    upper_degree: int
    slope_floor: int


def make_split(degrees: Iterable[int]) -> SplitType:
    """Builds a :class:`SplitType` from degrees in any order.

    Args:
        degrees: The summand degrees

    Returns:
        The splitting type with degrees sorted non-increasing

    Raises:
        InvalidInputError: if ``degrees`` is empty

    Examples:
    >>> make_split([-1, 0, 0]).degrees
    (0, 0, -1)
    >>> make_split([0, 1, 1]).c1
    2
    """
    return SplitType(tuple(degrees))


def balanced_of(rank: int, degree: int) -> SplitType:
    """The unique balanced splitting type of a given rank and degree.

    Examples:
    >>> balanced_of(3, 23).degrees
    (8, 8, 7)
    >>> balanced_of(2, -5).degrees
    (-2, -3)
    """
    if rank < 1:
        raise InvalidInputError(f"Rank must be at least 1, got {rank}")

    q, rem = divmod(degree, rank)
    return SplitType((q + 1,) * rem + (q,) * (rank - rem))


def balance_info(split: SplitType) -> BalanceInfo:
    """Reports balancedness, the upper subbundle and the slope floor.

    The upper rank :math:`r^+` is the multiplicity of the maximal degree :math:`a^+`; it
    equals the rank exactly when the bundle is a twist of the trivial bundle.

    Examples:
    >>> balance_info(make_split([6, 6, 6]))
    BalanceInfo(balanced=True, upper_rank=3, upper_degree=6, slope_floor=6)
    >>> balance_info(make_split([2, 0])).balanced
    False
    """
    a_plus = split.max_degree
    return BalanceInfo(
        balanced=split.is_balanced,
        upper_rank=split.degrees.count(a_plus),
        upper_degree=a_plus,
        slope_floor=split.slope_floor,
    )


def upper_subbundle(split: SplitType) -> SplitType:
    r"""The upper subbundle :math:`r^+\mathcal{O}(a^+)` of a balanced bundle."""
    info = balance_info(split)
    if not info.balanced:
        raise PreconditionError(f"The upper subbundle is defined for balanced bundles, got {split}")
    return SplitType((info.upper_degree,) * info.upper_rank)


def h_split(split: SplitType, t: int = 0) -> tuple[int, int]:
    r"""Cohomology dimensions :math:`(h^0, h^1)` of the twist :math:`E(t)`.

    Args:
        split: The bundle :math:`E`

        t: The twist

    Returns:
        The pair :math:`(h^0(E(t)), h^1(E(t)))`

    Examples:
    >>> h_split(make_split([5, 5]))
    (12, 0)
    >>> h_split(make_split([-2, -3]))
    (0, 3)
    """
    h0 = sum(max(0, a + t + 1) for a in split.degrees)
    h1 = sum(max(0, -a - t - 1) for a in split.degrees)
    return h0, h1


def h1_vanishing_threshold(split: SplitType) -> int:
    r"""Largest :math:`t` with :math:`H^1(E(-t)) = 0` for a balanced bundle.

    For balanced :math:`E` this is :math:`\lfloor \deg(E)/r \rfloor + 1`.
    """
    if not split.is_balanced:
        raise PreconditionError(f"The vanishing threshold needs a balanced bundle, got {split}")
    return split.slope_floor + 1


def end_bundle(split: SplitType) -> SplitType:
    r"""The endomorphism bundle :math:`\check{E} \otimes E`.

    Examples:
    >>> end_bundle(make_split([2, 0])).degrees
    (2, 0, 0, -2)
    """
    return SplitType(tuple(a - b for a in split.degrees for b in split.degrees))


def is_rigid(split: SplitType) -> bool:
    r"""Whether :math:`h^1(\check{E} \otimes E) = 0`, which holds exactly for balanced bundles"""
    return h_split(end_bundle(split), 0)[1] == 0
