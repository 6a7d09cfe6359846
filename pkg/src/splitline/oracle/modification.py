# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Explicit elementary modifications at points of :math:`\mathbb{A}^1`.

A down modification at a point :math:`p` with corank :math:`c` is the kernel of
:math:`E \to E_p \to Q_p` for a quotient :math:`Q_p` of the fibre of dimension :math:`c`.
Its sections are the sections of :math:`E` whose values at :math:`p` lie in the kernel of a
random :math:`c \times r` functional matrix. Up modifications are computed as duals of down
modifications of the dual bundle.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..exceptions import GenericityError, InvalidInputError
from ..splitcalc import Direction, SplitType
from .field import ExactField
from .profile import splitting_from_h0_function

logger = logging.getLogger(__name__)

__all__ = ["ModificationPoint", "modification_splitting"]


@dataclass(frozen=True)
class ModificationPoint:
    """Where and how much to modify.

    Args:
        coordinate: Affine coordinate of the point

        corank: Dimension of the quotient (down) or of the added subspace (up)

        direction: ``"down"`` or ``"up"``
    """

    coordinate: int
    corank: int = 1
    direction: Direction = Direction.DOWN

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.corank < 1:
            raise InvalidInputError(f"Corank must be positive, got {self.corank}")


def modification_splitting(
    split: SplitType,
    points: Sequence[ModificationPoint],
    seed: int = 0,
    *,
    field: ExactField | None = None,
    retries: int = 8,
    margin: int = 0,
) -> SplitType:
    """Splitting type of a random elementary modification.

    Down modifications are applied first, then up modifications.

    Args:
        split: The bundle to modify

        points: Modification points with distinct coordinates

        seed: Seed for the random quotients

        field: Coefficient field, the default prime field if omitted

        retries: Draws per point before giving up on a full-rank quotient

        margin: Extra twists added to both ends of the :math:`h^0` window

    Returns:
        The splitting type of the modified bundle

    Raises:
        InvalidInputError: if coordinates coincide or a corank exceeds the rank
        GenericityError: if no full-rank quotient is found

    Examples:
    >>> modification_splitting(SplitType((2, 2)), [ModificationPoint(1)]).degrees
    (2, 1)
    >>> modification_splitting(SplitType((1, 1)), [ModificationPoint(1, corank=2)]).degrees
    (0, 0)
    """
    field = field or ExactField()
    coordinates = [pt.coordinate for pt in points]
    if len(set(coordinates)) != len(coordinates):
        raise InvalidInputError(f"Modification points must be distinct, got {coordinates}")
    for pt in points:
        if pt.corank > split.rank:
            raise InvalidInputError(f"Corank {pt.corank} exceeds the rank of {split}")

    rng = np.random.default_rng(seed)
    down = [pt for pt in points if pt.direction is Direction.DOWN]
    up = [pt for pt in points if pt.direction is Direction.UP]

    result = split
    if down:
        result = _down_modification(result, down, rng, field, retries, margin)
    if up:
        result = _down_modification(result.dual(), up, rng, field, retries, margin).dual()

    logger.debug("Modification of %s at %s gives %s", split, coordinates, result)
    return result


def _down_modification(split, points, rng, field, retries, margin) -> SplitType:
    functionals = [
        _full_rank_functional(pt.corank, split.rank, rng, field, retries) for pt in points
    ]
    colength = sum(pt.corank for pt in points)

    def h0(t: int) -> int:
        offsets = [0]
        for a in split.degrees:
            offsets.append(offsets[-1] + max(0, a + t + 1))
        ncols = offsets[-1]

        rows = []
        for pt, functional in zip(points, functionals, strict=True):
            for coeffs in functional:
                row = [0] * ncols
                for i, a in enumerate(split.degrees):
                    for l in range(a + t + 1):
                        row[offsets[i] + l] = coeffs[i] * pt.coordinate**l
                rows.append(row)

        return ncols - field.rank(rows, ncols)

    upper = split.max_degree
    lower = split.min_degree - colength
    return splitting_from_h0_function(h0, split.rank, upper, lower, margin)


def _full_rank_functional(corank, rank, rng, field, retries) -> list[list[int]]:
    for _ in range(retries):
        functional = [[field.random_element(rng) for _ in range(rank)] for _ in range(corank)]
        if field.rank(functional, rank) == corank:
            return functional
    raise GenericityError(f"No quotient of rank {corank} found in {retries} draws over {field}")

