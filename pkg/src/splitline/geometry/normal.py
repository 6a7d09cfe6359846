# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Normal bundles of rational curves in :math:`\mathbb{P}^n`.

A general rational curve of degree :math:`e \geq n` in :math:`\mathbb{P}^n` has balanced
normal bundle of rank :math:`n - 1` and degree :math:`e(n+1) - 2`. The computation
degenerates the curve to a nodal union of two curves on the two components of a
degenerate :math:`\mathbb{P}^n`, modifies the normal bundles of the pieces according to
the blowups, and hands the resulting comb to the smoothing reduction. The rational normal
curve is degenerate inside a smooth :math:`\mathbb{P}^n`, where both branches are also up
modified at the node.
"""

import functools
import logging
from typing import NamedTuple

from ..exceptions import ConsistencyError, InvalidInputError
from ..splitcalc import Direction, SplitType, balance_info, balanced_of, general_modification
from ..treebundle import build_comb, smoothing_reduce
from .record import Assumption, PipelineRecord, Stage

logger = logging.getLogger(__name__)

__all__ = [
    "Case2Components",
    "UnionComponents",
    "blowup_modification",
    "nodal_union_restriction",
    "pn_case2_components",
    "pn_normal",
    "pn_pipeline",
    "pn_union_components",
    "rational_normal_pipeline",
    "span_normal",
]


def blowup_modification(split: SplitType, codimension: int) -> SplitType:
    r"""Normal bundle of the proper transform after blowing up a general center.

    Blowing up a center of codimension :math:`s` meeting the curve transversely in one
    point down modifies the normal bundle with colength :math:`s - 1`.

    Args:
        split: Normal bundle before the blowup

        codimension: Codimension :math:`s \geq 1` of the center

    Returns:
        Normal bundle of the proper transform

    Examples:
    >>> blowup_modification(SplitType((5, 5)), 2).degrees
    (5, 4)
    >>> blowup_modification(SplitType((5, 5)), 3).degrees
    (4, 4)
    """
    if codimension < 1:
        raise InvalidInputError(f"Codimension must be positive, got {codimension}")
    if codimension == 1:
        return split
    return general_modification(split, codimension - 1, Direction.DOWN)


def nodal_union_restriction(split: SplitType) -> SplitType:
    """Restriction of the normal bundle of a nodal union to one branch.

    It is the rank-1 up modification at the node of the branch's own normal bundle.

    Examples:
    >>> nodal_union_restriction(SplitType((5, 5, 3))).degrees
    (5, 5, 4)
    """
    return general_modification(split, 1, Direction.UP)


@functools.cache
def rational_normal_pipeline(n: int) -> PipelineRecord:
    r"""Normal bundle of the rational normal curve in :math:`\mathbb{P}^n`, by induction.

    The curve degenerates to a rational normal curve :math:`C'` in a hyperplane joined at
    one point to a transversal line :math:`L`. Both restrictions of the normal bundle are
    up modifications at the node, and their upper subspaces are transverse.

    Raises:
        InvalidInputError: if ``n < 2``
        ConsistencyError: if the prediction has the wrong rank or degree
    """
    if n < 2:
        raise InvalidInputError(f"Need n >= 2, got {n}")
    if n == 2:
        conic = SplitType((4,))
        return PipelineRecord("rational_normal", {"n": 2, "e": 2}, (Stage("normal", conic),), conic)

    in_hyperplane = rational_normal_pipeline(n - 1).predicted
    in_space = in_hyperplane.direct_sum(SplitType((n - 1,)))
    on_curve = nodal_union_restriction(in_space)
    line = SplitType((1,) * (n - 1))
    on_line = nodal_union_restriction(line)

    comb = build_comb(on_curve, [on_line])
    predicted = smoothing_reduce(comb).predicted
    notes = _check_prediction(predicted, n, n)

    return PipelineRecord(
        "rational_normal",
        {"n": n, "e": n},
        (
            Stage("hyperplane_normal", in_hyperplane),
            Stage("space_normal", in_space),
            Stage("curve_restriction", on_curve),
            Stage("line_normal", line),
            Stage("line_restriction", on_line),
        ),
        predicted,
        comb=comb,
        assumptions=(Assumption.TRANSVERSE_UPPER_SUBSPACES,),
        notes=notes,
    )


class Case2Components(NamedTuple):
    """Component bundles of the degeneration for :math:`n < e < 2n`, as tabulated.

    The second curve's bundles are ``None`` when :math:`e = 2n - 1`, where their
    multiplicities would be negative.
    """

    first_blowup: SplitType
    second_normal: SplitType | None
    second_blowup: SplitType | None


def pn_case2_components(n: int, e: int) -> Case2Components:
    r"""Component bundles of the degeneration for :math:`n < e < 2n`, as tabulated.

    These types do not add up to degree :math:`e(n+1) - 2`. The first blowup has colength
    one more than in :func:`pn_union_components`, whose second curve has these
    multiplicities at degree :math:`3n - 2 - e` instead of :math:`e`.
    :func:`pn_pipeline` assembles :func:`pn_union_components` instead.

    Examples:
    >>> parts = pn_case2_components(4, 5)
    >>> str(parts.first_blowup), str(parts.second_normal), str(parts.second_blowup)
    ('(5,5,5)', '(4,2,2)', '(3,2,2)')
    """
    if not n < e < 2 * n:
        raise InvalidInputError(f"Need n < e < 2n, got n={n}, e={e}")

    first = blowup_modification(balanced_of(n - 1, (n - 1) * (n + 2)), 2 * n - e + 1)
    upper = 2 * n - e - 2
    if upper < 0:
        return Case2Components(first, None, None)

    second = SplitType((2 * n - e + 1,) * upper + (2 * n - e - 1,) * (e - n + 1))
    return Case2Components(first, second, blowup_modification(second, 2 * n - e - 1))


class UnionComponents(NamedTuple):
    r"""Component bundles of the nodal union degenerating a curve of degree :math:`e > n`.

    Args:
        case: 2 for :math:`e < 2n`, 3 otherwise

        first_normal: Normal bundle of the rational normal curve on the first component

        first_blowup: Its proper transform's normal bundle, the base of the comb

        second_degree: Degree :math:`e - n + 1` of the second curve

        second_normal: Normal bundle of the second curve in :math:`\mathbb{P}^n`

        second_blowup: Its proper transform's normal bundle, the tooth of the comb
    """

    case: int
    first_normal: SplitType
    first_blowup: SplitType
    second_degree: int
    second_normal: SplitType
    second_blowup: SplitType


def span_normal(n: int, e: int) -> SplitType:
    r"""Normal bundle in :math:`\mathbb{P}^n` of a rational normal curve of degree :math:`e \leq n`.

    The curve spans a :math:`\mathbb{P}^e`, whose normal bundle restricts to
    :math:`(n - e)\mathcal{O}(e)`.

    Examples:
    >>> str(span_normal(4, 2)), str(span_normal(3, 3))
    ('(4,2,2)', '(5,5)')
    """
    if not 2 <= e <= n:
        raise InvalidInputError(f"Need 2 <= e <= n, got n={n}, e={e}")
    in_span = rational_normal_pipeline(e).predicted
    if e == n:
        return in_span
    return in_span.direct_sum(SplitType((e,) * (n - e)))


def pn_union_components(n: int, e: int) -> UnionComponents:
    r"""Component bundles of the nodal union degenerating a curve of degree :math:`e > n`.

    The first curve is a rational normal curve of degree :math:`n` on the blowup along a
    linear space of codimension :math:`s`, and the second curve of degree
    :math:`e - n + 1` meets the exceptional divisor once.

    * For :math:`e < 2n` the second curve is a rational normal curve in its span, the
      first blowup has :math:`s = 2n - e` and the second codimension :math:`e - n + 1`.
    * For :math:`e \geq 2n` the second curve is general, with normal bundle from
      :func:`pn_normal`. With :math:`r^+` its upper rank, the first blowup has
      :math:`s = r^+ + 1` and the second codimension :math:`n - r^+`.

    The ranks are :math:`n - 1` and the degrees add up to :math:`e(n+1) - 2` through the
    smoothing reduction.

    Raises:
        InvalidInputError: if ``n < 2`` or ``e <= n``

    Examples:
    >>> parts = pn_union_components(4, 5)
    >>> str(parts.first_blowup), str(parts.second_normal), str(parts.second_blowup)
    ('(6,5,5)', '(4,2,2)', '(3,2,2)')
    >>> parts = pn_union_components(3, 7)
    >>> parts.case, parts.second_degree, str(parts.second_normal)
    (3, 5, '(9,9)')
    """
    if n < 2:
        raise InvalidInputError(f"Need n >= 2, got n={n}")
    if e <= n:
        raise InvalidInputError(f"Need e > n, got n={n}, e={e}")

    first_normal = balanced_of(n - 1, (n - 1) * (n + 2))
    second_degree = e - n + 1
    if e < 2 * n:
        second_normal = span_normal(n, second_degree)
        return UnionComponents(
            2,
            first_normal,
            blowup_modification(first_normal, 2 * n - e),
            second_degree,
            second_normal,
            blowup_modification(second_normal, second_degree),
        )

    second_normal = pn_normal(n, second_degree)
    upper_rank = balance_info(second_normal).upper_rank
    return UnionComponents(
        3,
        first_normal,
        blowup_modification(first_normal, upper_rank + 1),
        second_degree,
        second_normal,
        blowup_modification(second_normal, n - upper_rank),
    )


@functools.cache
def pn_pipeline(n: int, e: int) -> PipelineRecord:
    r"""The staged computation of the normal bundle of a general rational curve.

    For :math:`e > n` the prediction is the smoothing reduction of the comb with base the
    first blowup and one tooth, the second blowup, as given by
    :func:`pn_union_components`.

    Args:
        n: Dimension of the projective space, at least 2

        e: Degree of the curve, at least ``n``

    Returns:
        The pipeline record. Its prediction has rank :math:`n - 1` and degree
        :math:`e(n+1) - 2`; an unbalanced prediction is logged and noted.

    Raises:
        InvalidInputError: if ``n < 2`` or ``e < n``
        ConsistencyError: if the union has the wrong rank or degree
    """
    if n < 2:
        raise InvalidInputError(f"Need n >= 2, got {n}")
    if e < n:
        raise InvalidInputError(f"Need e >= n, got n={n}, e={e}")
    if e == n:
        return rational_normal_pipeline(n)

    parts = pn_union_components(n, e)
    parameters = {"n": n, "e": e, "case": parts.case, "second_degree": parts.second_degree}
    if parts.case == 3:
        info = balance_info(parts.second_normal)
        parameters.update(upper_rank=info.upper_rank, upper_degree=info.upper_degree)

    comb = build_comb(parts.first_blowup, [parts.second_blowup])
    union = smoothing_reduce(comb).predicted
    notes = _check_prediction(union, n, e)

    logger.debug("Rational curve of degree %d in P^%d: %s", e, n, union)
    return PipelineRecord(
        "pn",
        parameters,
        (
            Stage("first_normal", parts.first_normal),
            Stage("first_blowup", parts.first_blowup),
            Stage("second_normal", parts.second_normal),
            Stage("second_blowup", parts.second_blowup),
            Stage("union", union),
        ),
        union,
        comb=comb,
        assumptions=(Assumption.TRANSVERSE_UPPER_SUBSPACES,),
        notes=notes,
    )


def _check_prediction(predicted: SplitType, n: int, e: int) -> tuple[str, ...]:
    degree = e * (n + 1) - 2
    if predicted.rank != n - 1 or predicted.c1 != degree:
        raise ConsistencyError(
            f"Curve of degree {e} in P^{n} gave {predicted}, expected rank {n - 1} degree {degree}"
        )
    if predicted.is_balanced:
        return ()
    logger.warning("Curve of degree %d in P^%d gave unbalanced %s", e, n, predicted)
    return (f"prediction {predicted} is unbalanced",)


def pn_normal(n: int, e: int) -> SplitType:
    r"""Normal bundle of a general rational curve of degree :math:`e \geq n` in projective space.

    Examples:
    >>> str(pn_normal(3, 3)), str(pn_normal(4, 5)), str(pn_normal(3, 6))
    ('(5,5)', '(8,8,7)', '(11,11)')
    """
    return pn_pipeline(n, e).predicted
