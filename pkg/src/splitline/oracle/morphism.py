# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Explicit morphisms between split bundles and their kernels.

A morphism :math:`\varphi: \bigoplus_i \mathcal{O}(a_i) \to \bigoplus_j \mathcal{O}(b_j)`
is a matrix whose :math:`(j, i)` entry is a form of degree :math:`b_j - a_i`, written in
the affine coordinate :math:`z` as a polynomial of degree at most :math:`b_j - a_i`.
Sections of :math:`\mathcal{O}(a)(t)` are polynomials of degree at most :math:`a + t`, so
the map on global sections is an integer matrix on monomial coefficients.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import GenericityError, InvalidInputError, PreconditionError
from ..splitcalc import SplitType, h_split
from .field import ExactField
from .profile import splitting_from_h0_function

logger = logging.getLogger(__name__)

__all__ = [
    "PolyMorphism",
    "general_morphism",
    "kernel_splitting",
    "section_matrix",
]

Poly = tuple[int, ...]


@dataclass(frozen=True)
class PolyMorphism:
    """A morphism of split bundles given by a matrix of polynomials.

    Args:
        source: The source bundle

        target: The target bundle

        entries: ``entries[j][i]`` holds the coefficients, lowest degree first, of the
            entry from source summand ``i`` to target summand ``j``. An entry of negative
            degree is the empty tuple.

        field: Coefficient field

        seed: Seed the entries were drawn from, if random
    """

    source: SplitType
    target: SplitType
    entries: tuple[tuple[Poly, ...], ...]
    field: ExactField = ExactField()
    seed: int | None = None

    def __post_init__(self):
        if len(self.entries) != self.target.rank:
            raise InvalidInputError(
                f"Expected {self.target.rank} rows for target {self.target}, "
                f"got {len(self.entries)}"
            )
        for j, row in enumerate(self.entries):
            if len(row) != self.source.rank:
                raise InvalidInputError(
                    f"Expected {self.source.rank} entries in row {j}, got {len(row)}"
                )
            for i, poly in enumerate(row):
                if len(poly) > max(0, self.entry_degree(j, i) + 1):
                    raise InvalidInputError(
                        f"Entry ({j}, {i}) exceeds degree {self.entry_degree(j, i)}: {poly}"
                    )

    def entry_degree(self, j: int, i: int) -> int:
        return self.target.degrees[j] - self.source.degrees[i]

    @property
    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for row in self.entries for poly in row for c in poly)

    def corank_at(self, t: int) -> int:
        """Codimension of the image of :math:`H^0(\\varphi(t))` in :math:`H^0(F(t))`"""
        rows = section_matrix(self, t)
        ncols = h_split(self.source, t)[0]
        return h_split(self.target, t)[0] - self.field.rank(rows, ncols)

    def surjectivity_twist(self) -> int:
        """A twist at which the section map is onto iff the sheaf map is.

        :math:`H^1` of the kernel, the image and the target vanish there, and a cokernel of
        positive rank has sections.
        """
        rank_k = self.source.rank - self.target.rank
        lower_k = self.source.c1 - self.target.c1 - max(rank_k - 1, 0) * self.source.max_degree
        return max(-lower_k - 1, -self.source.min_degree - 1, -self.target.min_degree) + 1


def section_matrix(phi: PolyMorphism, t: int) -> list[list[int]]:
    r"""Matrix of :math:`H^0(E(t)) \to H^0(F(t))` in monomial bases.

    Columns run over source summands ``i`` and monomials :math:`z^l`, :math:`l \leq a_i + t`;
    rows over target summands ``j`` and monomials :math:`z^k`, :math:`k \leq b_j + t`.
    """
    row_offsets = _offsets(phi.target, t)
    col_offsets = _offsets(phi.source, t)
    nrows, ncols = row_offsets[-1], col_offsets[-1]
    matrix = [[0] * ncols for _ in range(nrows)]

    for j, b in enumerate(phi.target.degrees):
        if b + t < 0:
            continue
        for i, a in enumerate(phi.source.degrees):
            for l in range(a + t + 1):
                for c, coeff in enumerate(phi.entries[j][i]):
                    matrix[row_offsets[j] + l + c][col_offsets[i] + l] = coeff

    return matrix


def _offsets(split: SplitType, t: int) -> list[int]:
    offsets = [0]
    for a in split.degrees:
        offsets.append(offsets[-1] + max(0, a + t + 1))
    return offsets


def general_morphism(
    source: SplitType,
    target: SplitType,
    seed: int = 0,
    *,
    field: ExactField | None = None,
    surjective: bool = False,
    retries: int = 8,
) -> PolyMorphism:
    """Draws a random morphism between split bundles.

    Every entry of non-negative degree receives random coefficients. The draw is repeated
    until its genericity certificates hold: the morphism is nonzero, and is surjective as
    a sheaf map when ``surjective`` is set.

    Args:
        source: The source bundle

        target: The target bundle

        seed: Seed for :func:`numpy.random.default_rng`

        field: Coefficient field, the default prime field if omitted

        surjective: Whether to certify surjectivity

        retries: Number of draws before giving up

    Returns:
        The certified morphism

    Raises:
        GenericityError: if no nonzero morphism exists, or the retry budget is exhausted

    Examples:
    >>> phi = general_morphism(SplitType((1, 1)), SplitType((2,)), seed=7, surjective=True)
    >>> [len(poly) for poly in phi.entries[0]]
    [2, 2]
    """
    field = field or ExactField()
    degrees = [[b - a for a in source.degrees] for b in target.degrees]
    if all(deg < 0 for row in degrees for deg in row):
        raise GenericityError(f"No nonzero morphism {source} -> {target} exists")
    if surjective and source.rank < target.rank:
        raise GenericityError(f"No surjection {source} -> {target} exists: rank too small")

    rng = np.random.default_rng(seed)
    for attempt in range(retries):
        entries = tuple(
            tuple(
                tuple(field.random_element(rng) for _ in range(deg + 1)) if deg >= 0 else ()
                for deg in row
            )
            for row in degrees
        )
        phi = PolyMorphism(source, target, entries, field=field, seed=seed)

        if phi.is_zero:
            continue
        if surjective and phi.corank_at(phi.surjectivity_twist()) != 0:
            logger.debug("Draw %d of %s -> %s is not surjective", attempt, source, target)
            continue
        return phi

    raise GenericityError(
        f"No general morphism {source} -> {target} found in {retries} draws over {field}"
    )


def kernel_splitting(phi: PolyMorphism, margin: int = 0) -> SplitType:
    r"""Splitting type of the kernel of a surjective morphism.

    Uses :math:`h^0(K(t)) = \dim\ker(H^0(E(t)) \to H^0(F(t)))` over a window of twists,
    widened by ``margin`` on both ends.

    Raises:
        PreconditionError: if ``phi`` is not surjective
        InvalidInputError: if the kernel would have rank 0

    Examples:
    >>> phi = general_morphism(SplitType((1, 1)), SplitType((2,)), surjective=True)
    >>> kernel_splitting(phi).degrees
    (0,)
    """
    source, target = phi.source, phi.target
    rank = source.rank - target.rank
    if rank < 1:
        raise InvalidInputError(f"Kernel of {source} -> {target} has rank {rank}")
    if phi.corank_at(phi.surjectivity_twist()) != 0:
        raise PreconditionError(f"Morphism {source} -> {target} is not surjective")

    upper = source.max_degree
    lower = source.c1 - target.c1 - (rank - 1) * upper

    def h0(t: int) -> int:
        ncols = h_split(source, t)[0]
        return ncols - phi.field.rank(section_matrix(phi, t), ncols)

    return splitting_from_h0_function(h0, rank, upper, lower, margin)
