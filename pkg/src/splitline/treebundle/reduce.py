# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""The smoothing reduction of a broken comb.

Teeth are eliminated from the outside in. An extremal component :math:`F` with
:math:`E_F \simeq r^+\mathcal{O}(d^+) \oplus (r - r^+)\mathcal{O}(d^+ - 1)` is contracted
onto its neighbour, whose bundle is twisted by :math:`d^+` at the node and then down
modified with corank :math:`r - r^+` there. A general corank :math:`c` quotient at one
point lowers the :math:`c` highest summands, and these operations commute, so the result
does not depend on the order in which the roots are processed.

On partitions a balanced neighbour changes by :math:`M_{\deg E_F}`, which gives the bound
:math:`\Pi(E') \leq M_k(\Pi(E_B))` with :math:`k = \sum_i \deg E_{T_i}` and equality for a
balanced base. An unbalanced base can end up above the bound: twisting moves every summand
while :math:`M_k` only raises the lowest ones.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..exceptions import ConsistencyError, HypothesisError, InvalidInputError
from ..splitcalc import (
    Direction,
    Partition,
    SplitType,
    balance_info,
    modify_partition,
    partition_of,
    point_modification,
    split_of,
)
from .comb import CombSpec

logger = logging.getLogger(__name__)

__all__ = [
    "ReductionResult",
    "ReductionStep",
    "RootReduction",
    "comb_is_balanced_smoothing",
    "contract_onto",
    "smoothing_reduce",
]


@dataclass(frozen=True)
class ReductionStep:
    """One contraction of an extremal component onto its neighbour"""

    component: str
    into: str
    twist: int
    upper_rank: int
    corank: int


@dataclass(frozen=True)
class RootReduction:
    """What a tooth does to the base at its root.

    Args:
        root: Name of the tooth root

        degree: Total degree :math:`k_i` of the tooth

        twist: Twist multiplicity :math:`m_i` applied at the root

        coranks: Coranks of the down modifications along the tooth, root last
    """

    root: str
    degree: int
    twist: int
    coranks: tuple[int, ...]


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of :func:`smoothing_reduce`"""

    predicted: SplitType
    bound: Partition
    roots: tuple[RootReduction, ...]
    trace: tuple[ReductionStep, ...]

    @property
    def strict_bound(self) -> bool:
        """Whether the predicted partition lies strictly below the bound"""
        return partition_of(self.predicted) < self.bound

    @property
    def exceeds_bound(self) -> bool:
        """Whether the predicted partition lies above the bound, possible for unbalanced bases"""
        return self.bound < partition_of(self.predicted)


def contract_onto(split: SplitType, reduced: SplitType) -> SplitType:
    r"""Contracts a balanced extremal component onto its neighbour.

    Args:
        split: Bundle of the neighbour

        reduced: Balanced bundle of the extremal component, of the same rank

    Returns:
        ``split`` twisted by :math:`d^+` at the node, then down modified there with
        corank :math:`r - r^+`

    Raises:
        HypothesisError: if ``reduced`` is unbalanced
        InvalidInputError: if the ranks differ

    Examples:
    >>> contract_onto(SplitType((5, 0)), SplitType((1, 1))).degrees
    (6, 1)
    >>> contract_onto(SplitType((3, 3)), SplitType((0, -1))).degrees
    (3, 2)
    """
    if split.rank != reduced.rank:
        raise InvalidInputError(f"Cannot contract {reduced} onto {split}: ranks differ")
    info = balance_info(reduced)
    if not info.balanced:
        raise HypothesisError(f"Contracted component {reduced} is unbalanced")

    twisted = split.twist(info.upper_degree)
    corank = reduced.rank - info.upper_rank
    if corank == 0:
        return twisted
    return point_modification(twisted, corank, Direction.DOWN)


def smoothing_reduce(comb: CombSpec, order: Sequence[str] | None = None) -> ReductionResult:
    """Predicts the splitting type of a smoothing of a broken comb.

    Args:
        comb: The comb

        order: Processing order of the tooth roots. Defaults to the comb's order.

    Returns:
        The predicted type, the partition bound and the per-root record

    Raises:
        HypothesisError: if a tail component violates the smoothing hypotheses
        InvalidInputError: if ``order`` is not a permutation of the tooth roots
        ConsistencyError: if the prediction does not have degree :math:`\\deg E_B + k`

    Examples:
    >>> from splitline.treebundle import build_comb
    >>> result = smoothing_reduce(build_comb(SplitType((0, 0)), [SplitType((0, -1))] * 5))
    >>> str(result.predicted), result.strict_bound
    ('(-2,-3)', False)
    >>> result = smoothing_reduce(build_comb(SplitType((5, 0)), [SplitType((1, 1))]))
    >>> str(result.predicted), str(split_of(result.bound)), result.exceeds_bound
    ('(6,1)', '(5,2)', True)
    """
    if failures := comb.hypothesis_failures():
        raise HypothesisError("; ".join(failures))

    roots = tuple(comb.roots) if order is None else tuple(order)
    if sorted(roots) != sorted(comb.roots):
        raise InvalidInputError(f"Order {list(roots)} is not a permutation of {list(comb.roots)}")

    base = comb.base
    current = base.split
    trace: list[ReductionStep] = []
    records = []

    for root in roots:
        steps, reduced = _reduce_tooth(comb, root)
        steps.append(_step(root, base.name, reduced))
        trace.extend(steps)
        current = contract_onto(current, reduced)
        records.append(
            RootReduction(
                root, reduced.c1, balance_info(reduced).upper_degree, tuple(s.corank for s in steps)
            )
        )

    predicted = current
    bound = modify_partition(partition_of(base.split), comb.k)
    if predicted.c1 != base.split.c1 + comb.k:
        raise ConsistencyError(f"Reduction of {base.split} lost degree: got {predicted}")

    result = ReductionResult(predicted, bound, tuple(records), tuple(trace))
    if result.strict_bound:
        logger.warning(
            "Predicted %s lies strictly below the bound %s", predicted, split_of(bound)
        )
    elif result.exceeds_bound:
        logger.warning(
            "Predicted %s lies above the bound %s of the unbalanced base %s",
            predicted,
            split_of(bound),
            base.split,
        )
    logger.debug("Comb with base %s and k=%d reduces to %s", base.split, comb.k, predicted)
    return result


def _step(component: str, into: str, reduced: SplitType) -> ReductionStep:
    info = balance_info(reduced)
    return ReductionStep(
        component, into, info.upper_degree, info.upper_rank, reduced.rank - info.upper_rank
    )


def _reduce_tooth(comb: CombSpec, root: str) -> tuple[list[ReductionStep], SplitType]:
    steps: list[ReductionStep] = []

    def contract(name: str) -> SplitType:
        split = comb.component(name).split
        for child in comb.children(name):
            reduced = contract(child)
            steps.append(_step(child, name, reduced))
            split = contract_onto(split, reduced)
        return split

    return steps, contract(root)


def comb_is_balanced_smoothing(comb: CombSpec) -> bool:
    """Whether the predicted smoothing of ``comb`` is balanced.

    Examples:
    >>> from splitline.treebundle import build_comb
    >>> comb_is_balanced_smoothing(build_comb(SplitType((5, 5, 5))))
    True
    """
    return smoothing_reduce(comb).predicted.is_balanced
