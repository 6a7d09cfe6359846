# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Extensions of split bundles given by transition matrices.

An extension :math:`0 \to E_1 \to E \to E_2 \to 0` of
:math:`E_1 = \bigoplus \mathcal{O}(a_i)` by :math:`E_2 = \bigoplus \mathcal{O}(b_j)` is
glued from trivial bundles on the charts :math:`U_0 = \{z \neq \infty\}` and
:math:`U_1 = \{z \neq 0\}` by the transition matrix

.. math::

    T = \begin{pmatrix} \mathrm{diag}(z^{-a_i}) & X \\ 0 & \mathrm{diag}(z^{-b_j}) \end{pmatrix}

with :math:`X` a matrix of Laurent polynomials representing the extension class. A
section of :math:`E(t)` is a polynomial vector :math:`v` on :math:`U_0` such that
:math:`z^{-t} T v` has no positive powers of :math:`z`.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidInputError
from ..splitcalc import SplitType, partition_of
from .field import ExactField
from .profile import splitting_from_h0_function

logger = logging.getLogger(__name__)

__all__ = ["TransitionBundle", "extension_splitting", "random_extension"]

Laurent = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TransitionBundle:
    """A bundle given by an upper block-triangular transition matrix.

    Args:
        sub: The subbundle :math:`E_1`

        quotient: The quotient :math:`E_2`

        extension: ``extension[i][j]`` lists ``(exponent, coefficient)`` pairs of the
            Laurent polynomial :math:`X_{ij}`

        field: Coefficient field
    """

    sub: SplitType
    quotient: SplitType
    extension: tuple[tuple[Laurent, ...], ...]
    field: ExactField = ExactField()

    @property
    def rank(self) -> int:
        return self.sub.rank + self.quotient.rank

    @property
    def c1(self) -> int:
        return self.sub.c1 + self.quotient.c1

    @property
    def exponent_bound(self) -> int:
        exponents = [abs(k) for row in self.extension for entry in row for k, _ in entry]
        return max(exponents, default=0)

    def h0(self, t: int) -> int:
        r"""Dimension of :math:`H^0(E(t))`, solved as a bounded-degree linear system"""
        width = self.exponent_bound
        b_max = self.quotient.max_degree

        # unknowns: y_j of degree <= b_j + t, then x_i of degree <= a_i + t + width + b_max
        columns: list[tuple[str, int, int]] = []
        for j, b in enumerate(self.quotient.degrees):
            columns.extend(("y", j, l) for l in range(b + t + 1))
        for i, a in enumerate(self.sub.degrees):
            columns.extend(("x", i, l) for l in range(a + t + width + b_max + 1))
        if not columns:
            return 0

        # one equation per block row i and positive exponent of z^{-t}(z^{-a_i} x_i + X y)
        equations: dict[tuple[int, int], dict[int, int]] = {}
        for col, (kind, index, l) in enumerate(columns):
            if kind == "x":
                exponent = l - t - self.sub.degrees[index]
                if exponent > 0:
                    equations.setdefault((index, exponent), {})[col] = 1
                continue
            for i in range(self.sub.rank):
                for k, coeff in self.extension[i][index]:
                    exponent = k + l - t
                    if exponent > 0:
                        row = equations.setdefault((i, exponent), {})
                        row[col] = row.get(col, 0) + coeff

        ncols = len(columns)
        rows = []
        for key in sorted(equations):
            row = [0] * ncols
            for col, value in equations[key].items():
                row[col] = value
            rows.append(row)

        return ncols - self.field.rank(rows, ncols)

    def splitting(self, margin: int = 0) -> SplitType:
        upper = max(self.sub.max_degree, self.quotient.max_degree)
        lower = min(self.sub.min_degree, self.quotient.min_degree)
        return splitting_from_h0_function(self.h0, self.rank, upper, lower, margin)


def random_extension(
    sub: SplitType, quotient: SplitType, seed: int = 0, *, field: ExactField | None = None
) -> TransitionBundle:
    """A transition bundle with a random extension class.

    Every entry of :math:`X` receives random coefficients at exponents in
    ``[-W, W]`` with ``W = max|a| + max|b| + 2``, which spans every class in
    :math:`\\mathrm{Ext}^1(E_2, E_1)`. The class is random, not certified general: a
    special class gives a less balanced middle term, which :func:`extension_splitting`
    guards against by comparing independent draws.
    """
    field = field or ExactField()
    rng = np.random.default_rng(seed)
    width = max(abs(a) for a in sub) + max(abs(b) for b in quotient) + 2

    extension = tuple(
        tuple(
            tuple((k, field.random_element(rng)) for k in range(-width, width + 1))
            for _ in quotient.degrees
        )
        for _ in sub.degrees
    )
    return TransitionBundle(sub, quotient, extension, field=field)


def extension_splitting(
    sub: SplitType,
    quotient: SplitType,
    seed: int = 0,
    *,
    field: ExactField | None = None,
    margin: int = 0,
    draws: int = 2,
) -> SplitType:
    """Splitting type of a general extension of ``quotient`` by ``sub``.

    The splitting type of the middle term is upper semicontinuous in the class, so the
    most balanced of ``draws`` independent random classes is kept. The first draw uses
    ``seed`` itself. Draws that disagree are logged.

    Raises:
        InvalidInputError: if ``draws`` is not positive

    Examples:
    >>> extension_splitting(SplitType((-1,)), SplitType((1,))).degrees
    (0, 0)
    """
    if draws < 1:
        raise InvalidInputError(f"Need at least one draw, got {draws}")

    seeds = [seed] + [
        int(child.generate_state(1)[0]) for child in np.random.SeedSequence(seed).spawn(draws - 1)
    ]
    splits = [random_extension(sub, quotient, s, field=field).splitting(margin) for s in seeds]
    result = min(splits, key=partition_of)
    if len(set(splits)) > 1:
        logger.warning(
            "Extension draws of %s by %s disagree: %s, keeping %s",
            quotient,
            sub,
            [str(s) for s in splits],
            result,
        )
    logger.debug("Extension of %s by %s splits as %s", quotient, sub, result)
    return result
