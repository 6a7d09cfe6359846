# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Recovering a splitting type from its :math:`h^0` profile.

For :math:`E = \bigoplus \mathcal{O}(a_i)` the function :math:`t \mapsto h^0(E(t))` is
convex and piecewise linear, and its second difference at :math:`t` counts the summands
of degree :math:`-t`:

.. math::

    h^0(E(t)) - 2h^0(E(t-1)) + h^0(E(t-2)) = \#\{i : a_i = -t\}
"""

import itertools
import logging
from collections.abc import Callable, Mapping

from ..exceptions import InvalidInputError
from ..splitcalc import SplitType

logger = logging.getLogger(__name__)

__all__ = ["h0_window", "splitting_from_h0_profile", "splitting_from_h0_function"]


def h0_window(upper: int, lower: int, margin: int = 0) -> range:
    r"""Twists sufficient to recover a bundle with degrees in ``[lower, upper]``.

    The window starts at :math:`-\mathrm{upper} - 2`, where :math:`h^0` vanishes, and ends
    at :math:`-\mathrm{lower} + 2`, past the twist detecting the lowest summand.

    Args:
        upper: Upper bound on the degrees

        lower: Lower bound on the degrees

        margin: Extra twists added on both ends

    Examples:
    >>> h0_window(1, -1)
    range(-3, 4)
    """
    if lower > upper:
        raise InvalidInputError(f"Empty degree range [{lower}, {upper}]")
    return range(-upper - 2 - margin, -lower + 3 + margin)


def splitting_from_h0_profile(profile: Mapping[int, int], rank: int | None = None) -> SplitType:
    """Inverts the :math:`h^0` formula of split bundles.

    Args:
        profile: Values :math:`h^0(E(t))` on a window of consecutive twists, starting at a
            twist where :math:`h^0` vanishes

        rank: Expected rank. If omitted, the profile must be linear over its last two
            steps.

    Returns:
        The unique splitting type with this profile

    Raises:
        InvalidInputError: if the window is not consecutive, does not start at a vanishing
            value, has a negative second difference, or is inconsistent with ``rank``

    Examples:
    >>> splitting_from_h0_profile({t: max(0, t + 2) + max(0, t) for t in range(-4, 4)}).degrees
    (1, -1)
    """
    twists = sorted(profile)
    if len(twists) < 3:
        raise InvalidInputError(f"A profile needs at least three twists, got {len(twists)}")
    if twists[-1] - twists[0] != len(twists) - 1:
        raise InvalidInputError(f"Profile twists must be consecutive, got {twists}")
    if profile[twists[0]] != 0:
        raise InvalidInputError(
            f"Profile must start where h0 vanishes, "
            f"got h0 = {profile[twists[0]]} at t = {twists[0]}"
        )

    degrees: list[int] = []
    prev2, prev1 = 0, 0
    for t in twists:
        h0 = profile[t]
        count = h0 - 2 * prev1 + prev2
        if count < 0:
            raise InvalidInputError(f"Profile is not convex at t = {t}")
        degrees.extend([-t] * count)
        prev2, prev1 = prev1, h0

    if rank is None:
        if profile[twists[-1]] - 2 * profile[twists[-2]] + profile[twists[-3]] != 0:
            raise InvalidInputError("Profile is not linear at the end of the window")
    elif len(degrees) != rank:
        raise InvalidInputError(
            f"Profile detects {len(degrees)} summands, expected rank {rank}; widen the window"
        )

    if not degrees:
        raise InvalidInputError("Profile detects no summands")

    return SplitType(tuple(degrees))


def splitting_from_h0_function(
    h0: Callable[[int], int], rank: int, upper: int, lower: int, margin: int = 0
) -> SplitType:
    """Evaluates ``h0`` over :func:`h0_window` and recovers the splitting type"""
    window = h0_window(upper, lower, margin)
    profile = {t: h0(t) for t in window}
    logger.debug(
        "h0 profile on [%d, %d]: %s",
        window.start,
        window.stop - 1,
        list(itertools.islice(profile.values(), 64)),
    )
    return splitting_from_h0_profile(profile, rank=rank)
