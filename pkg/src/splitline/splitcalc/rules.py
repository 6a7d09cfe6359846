# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Closed-form rules for general modifications, kernels and extensions.

These are the splitting types produced by *general* choices. The exact-linear-algebra
oracle in :mod:`splitline.oracle` computes the same quantities for explicit random
choices and is used to cross-check every rule here.
"""

from enum import Enum

from ..exceptions import ConsistencyError, GenericityError, InvalidInputError, PreconditionError
from .partition import modify_partition, partition_of, split_of
from .split_type import SplitType, balance_info, balanced_of, make_split

__all__ = [
    "Direction",
    "balanced_extension",
    "general_kernel",
    "general_modification",
    "point_modification",
]


class Direction(Enum):
    """Direction of an elementary modification"""

    DOWN = "down"
    UP = "up"


def general_modification(split: SplitType, colength: int, direction: Direction | str) -> SplitType:
    r"""Splitting type of a general elementary modification.

    A down modification of colength :math:`s` is the kernel of a general surjection onto a
    torsion sheaf of length :math:`s`; an up modification is the dual notion. The partition
    of the result is :math:`M_{\mp s}(\Pi(E))`. For unbalanced bundles "general" means
    general position with respect to every Harder-Narasimhan block, which is what a
    modification supported at :math:`s` distinct general points achieves. For balanced
    bundles and :math:`s \leq r` the same type arises from a single point.

    Args:
        split: The bundle :math:`E`

        colength: The colength :math:`s \geq 1`

        direction: ``"down"`` or ``"up"``

    Returns:
        The splitting type of the modified bundle

    Raises:
        InvalidInputError: if ``colength`` is not positive

    Examples:
    >>> general_modification(SplitType((2, 2)), 1, "down").degrees
    (2, 1)
    >>> general_modification(SplitType((1, 0, 0)), 2, "down").degrees
    (0, 0, -1)
    >>> general_modification(SplitType((0, 0)), 1, "up").degrees
    (1, 0)
    """
    direction = Direction(direction)
    if colength <= 0:
        raise InvalidInputError(f"Colength must be positive, got {colength}")

    k = -colength if direction is Direction.DOWN else colength
    return split_of(modify_partition(partition_of(split), k))


def point_modification(split: SplitType, corank: int, direction: Direction | str) -> SplitType:
    r"""Splitting type of a general elementary modification at a single point.

    A general quotient of corank :math:`c` of the fibre at one point meets every
    Harder-Narasimhan block as transversely as possible, so a down modification lowers the
    :math:`c` highest summands by one and an up modification raises the :math:`c` lowest.
    It agrees with :func:`general_modification` whenever no summand would be moved twice.

    Args:
        split: The bundle :math:`E`

        corank: The corank :math:`1 \leq c \leq r`

        direction: ``"down"`` or ``"up"``

    Raises:
        InvalidInputError: if ``corank`` is not in ``[1, rank]``

    Examples:
    >>> point_modification(SplitType((5, 0)), 2, "down").degrees
    (4, -1)
    >>> general_modification(SplitType((5, 0)), 2, "down").degrees
    (3, 0)
    >>> point_modification(SplitType((2, 1, 1)), 2, "up").degrees
    (2, 2, 2)
    """
    direction = Direction(direction)
    if not 1 <= corank <= split.rank:
        raise InvalidInputError(f"Corank must lie in [1, {split.rank}], got {corank}")

    degrees = list(split.degrees)
    if direction is Direction.DOWN:
        moved = [a - 1 for a in degrees[:corank]] + degrees[corank:]
    else:
        moved = degrees[: split.rank - corank] + [a + 1 for a in degrees[split.rank - corank :]]
    return make_split(moved)


def general_kernel(split: SplitType, m: int) -> SplitType:
    r"""Kernel of a general surjection :math:`E \to \mathcal{O}(m)` from a balanced bundle.

    After twisting so that :math:`E \simeq r_+\mathcal{O}(1) \oplus (r - r_+)\mathcal{O}`
    write :math:`\ell = m = q(r-1) + p` with :math:`0 \leq p < r-1`. Then

    .. math::

        K \simeq \begin{cases}
        (r_+ - p)\mathcal{O}(1-q) \oplus (r - 1 - r_+ + p)\mathcal{O}(-q) & p \leq r_+ \\
        (r - 1 - p + r_+)\mathcal{O}(-q) \oplus (p - r_+)\mathcal{O}(-q-1) & p > r_+
        \end{cases}

    which is balanced of rank :math:`r - 1` and degree :math:`\deg E - m`.

    Args:
        split: A balanced bundle of rank at least 2

        m: Degree of the target line bundle, at least :math:`a^+`

    Returns:
        The splitting type of the kernel

    Raises:
        PreconditionError: if ``split`` is not balanced
        InvalidInputError: if ``split`` has rank 1
        GenericityError: if ``m`` is below the top degree, so no general surjection exists

    Examples:
    >>> general_kernel(SplitType((1, 1, 0)), 2).degrees
    (0, 0)
    >>> general_kernel(SplitType((2, 2, 2)), 3).degrees
    (2, 1)
    """
    info = balance_info(split)
    if not info.balanced:
        raise PreconditionError(f"The kernel rule needs a balanced bundle, got {split}")
    if split.rank < 2:
        raise InvalidInputError(f"The kernel of a surjection from {split} has rank 0")
    if m < info.upper_degree:
        raise GenericityError(
            f"No general surjection {split} -> O({m}) exists: degree below a+ = {info.upper_degree}"
        )

    r = split.rank
    a_minus = split.min_degree
    r_plus = split.c1 - r * a_minus  # number of summands of degree a_minus + 1
    q, p = divmod(m - a_minus, r - 1)

    if p <= r_plus:
        degrees = (1 - q,) * (r_plus - p) + (-q,) * (r - 1 - r_plus + p)
    else:
        degrees = (-q,) * (r - 1 - p + r_plus) + (-q - 1,) * (p - r_plus)

    kernel = SplitType(degrees).twist(a_minus)
    if kernel != balanced_of(r - 1, split.c1 - m):
        raise ConsistencyError(f"Kernel rule is inconsistent for {split} and m={m}: got {kernel}")
    return kernel


def balanced_extension(sub: SplitType, quotient: SplitType) -> SplitType:
    r"""Middle term of an extension of balanced bundles with equal slope floors.

    For :math:`0 \to E_1 \to E \to E_2 \to 0` with :math:`E_1, E_2` balanced and
    :math:`\lfloor s_1 \rfloor = \lfloor s_2 \rfloor`, the extension splits and :math:`E`
    is balanced.

    Raises:
        PreconditionError: if either bundle is unbalanced or the slope floors differ

    Examples:
    >>> balanced_extension(SplitType((1, 0)), SplitType((1, 1, 0))).degrees
    (1, 1, 1, 0, 0)
    """
    if not (sub.is_balanced and quotient.is_balanced):
        raise PreconditionError(f"Extension rule needs balanced bundles, got {sub} and {quotient}")
    if sub.slope_floor != quotient.slope_floor:
        raise PreconditionError(
            f"Slope floors differ: {sub.slope_floor} for {sub} and "
            f"{quotient.slope_floor} for {quotient}"
        )

    return balanced_of(sub.rank + quotient.rank, sub.c1 + quotient.c1)
