# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Cohomology of bundles on rational trees.

A bundle on a tree of :math:`\mathbb{P}^1`'s is a split bundle on every component
together with, at every node, an identification of the two fibres. Global sections are
computed from the Mayer-Vietoris sequence

.. math::

    0 \to H^0(E) \to \bigoplus_i H^0(E_i) \to \bigoplus_{\text{nodes}} E_{\text{node}}
    \to H^1(E) \to \bigoplus_i H^1(E_i) \to 0

Nodes sit at the affine points :math:`1, 2, 3, \dots` of each component, in the order in
which the nodes list them.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..exceptions import GenericityError, InvalidInputError
from ..splitcalc import SplitType, h_split
from ..treebundle import CombSpec, GluingMode, Role
from .field import ExactField

logger = logging.getLogger(__name__)

__all__ = [
    "TreeBundleData",
    "TreeCohomology",
    "TreeNode",
    "end_tree",
    "general_gluing",
    "tree_cohomology",
    "tree_data_from_comb",
]

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TreeNode:
    r"""A node joining two components.

    The node condition on sections is :math:`F s_a(p) = G s_b(q)`, with ``first_frame``
    :math:`F` the identity when omitted.

    Args:
        first: Index of the first component

        second: Index of the second component

        first_point: Affine coordinate of the node on the first component

        second_point: Affine coordinate of the node on the second component

        gluing: The invertible matrix :math:`G`

        first_frame: The invertible matrix :math:`F`, or ``None`` for the identity
    """

    first: int
    second: int
    first_point: int
    second_point: int
    gluing: Matrix
    first_frame: Matrix | None = None


class TreeCohomology(NamedTuple):
    """Cohomology dimensions of a bundle on a tree"""

    h0: int
    h1: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1


@dataclass(frozen=True)
class TreeBundleData:
    """A bundle on a rational tree, with explicit gluing over an exact field.

    Raises:
        InvalidInputError: if the topology is not a tree, ranks differ, node coordinates
            repeat on a component, or a gluing matrix is singular
    """

    components: tuple[SplitType, ...]
    nodes: tuple[TreeNode, ...]
    field: ExactField = ExactField()

    def __post_init__(self):
        n = len(self.components)
        if n == 0:
            raise InvalidInputError("A tree needs at least one component")
        ranks = {split.rank for split in self.components}
        if len(ranks) != 1:
            raise InvalidInputError(f"Components must share one rank, got ranks {sorted(ranks)}")
        if len(self.nodes) != n - 1:
            raise InvalidInputError(
                f"A tree on {n} components has {n - 1} nodes, got {len(self.nodes)}"
            )

        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        seen_points: set[tuple[int, int]] = set()
        for node in self.nodes:
            for index, point in ((node.first, node.first_point), (node.second, node.second_point)):
                if not 0 <= index < n:
                    raise InvalidInputError(f"Node refers to missing component {index}")
                if (index, point) in seen_points:
                    raise InvalidInputError(f"Two nodes at point {point} of component {index}")
                seen_points.add((index, point))

            root_a, root_b = find(node.first), find(node.second)
            if root_a == root_b:
                raise InvalidInputError("Node topology contains a cycle")
            parent[root_a] = root_b

            for matrix in (node.gluing, node.first_frame):
                if matrix is not None and self.field.rank(matrix, self.rank) != self.rank:
                    raise InvalidInputError("Gluing matrices must be invertible")

    @property
    def rank(self) -> int:
        return self.components[0].rank

    @property
    def chi(self) -> int:
        return sum(s.c1 + s.rank for s in self.components) - self.rank * len(self.nodes)


def general_gluing(
    rank: int, rng: np.random.Generator, field: ExactField, retries: int = 8
) -> Matrix:
    """Draws a random matrix certified to be invertible"""
    for _ in range(retries):
        matrix = tuple(tuple(field.random_element(rng) for _ in range(rank)) for _ in range(rank))
        if field.rank(matrix, rank) == rank:
            return matrix
    raise GenericityError(f"No invertible {rank}x{rank} matrix found in {retries} draws")


def tree_cohomology(
    data: TreeBundleData, twists: Mapping[int, int] | None = None
) -> TreeCohomology:
    """Computes :math:`(h^0, h^1)` of a bundle on a tree.

    Args:
        data: The bundle

        twists: Optional twist per component index

    Returns:
        The cohomology dimensions

    Examples:
    >>> line = SplitType((1,))
    >>> data = TreeBundleData((line, line), (TreeNode(0, 1, 1, 1, ((1,),)),))
    >>> tree_cohomology(data)
    TreeCohomology(h0=3, h1=0)
    """
    twists = twists or {}
    components = [split.twist(twists.get(i, 0)) for i, split in enumerate(data.components)]
    r = data.rank

    offsets = [0]
    for split in components:
        offsets.append(offsets[-1] + h_split(split, 0)[0])
    ncols = offsets[-1]

    rows = []
    for node in data.nodes:
        first = _evaluation(components[node.first], node.first_point)
        second = _evaluation(components[node.second], node.second_point)
        frame = node.first_frame
        for c in range(r):
            row = [0] * ncols
            for i, entries in enumerate(first):
                weight = frame[c][i] if frame is not None else int(c == i)
                if weight:
                    for l, value in entries:
                        row[offsets[node.first] + l] += weight * value
            for i, entries in enumerate(second):
                weight = node.gluing[c][i]
                for l, value in entries:
                    row[offsets[node.second] + l] -= weight * value
            rows.append(row)

    h0 = ncols - data.field.rank(rows, ncols)
    chi = sum(s.c1 + s.rank for s in components) - r * len(data.nodes)
    logger.debug("Tree with %d components: h0=%d, chi=%d", len(components), h0, chi)
    return TreeCohomology(h0=h0, h1=h0 - chi)


def _evaluation(split: SplitType, point: int) -> list[list[tuple[int, int]]]:
    # per summand: (local column, value of z^l at the point)
    entries = []
    start = 0
    for a in split.degrees:
        size = max(0, a + 1)
        entries.append([(start + l, point**l) for l in range(size)])
        start += size
    return entries


def tree_data_from_comb(
    comb: CombSpec,
    seed: int = 0,
    *,
    field: ExactField | None = None,
    retries: int = 8,
    base_twist: int = 0,
) -> TreeBundleData:
    """Explicit bundle data for a comb.

    Edges with general gluing receive certified random invertible matrices; explicit edges
    use their stored matrix. Node points are assigned per component in edge order. The base
    component is twisted by ``base_twist``.
    """
    field = field or ExactField()
    rng = np.random.default_rng(seed)
    index = {component.name: i for i, component in enumerate(comb.components)}
    next_point = [1] * len(comb.components)

    nodes = []
    for edge in comb.edges:
        a, b = index[edge.parent], index[edge.child]
        if edge.mode is GluingMode.EXPLICIT and edge.gluing is not None:
            gluing = edge.gluing
        else:
            gluing = general_gluing(comb.rank, rng, field, retries)
        nodes.append(TreeNode(a, b, next_point[a], next_point[b], gluing))
        next_point[a] += 1
        next_point[b] += 1

    return TreeBundleData(
        tuple(
            c.split.twist(base_twist) if c.role is Role.BASE else c.split for c in comb.components
        ),
        tuple(nodes),
        field=field,
    )


def end_tree(data: TreeBundleData) -> TreeBundleData:
    r"""The endomorphism bundle :math:`\check{E} \otimes E` of a bundle on a tree.

    The summand :math:`\mathrm{Hom}(\mathcal{O}(a_j), \mathcal{O}(a_i))` of degree
    :math:`a_i - a_j` carries the matrix entry :math:`A_{ij}`. A node with gluing :math:`G`
    imposes :math:`A_a G = G A_b`.

    Raises:
        InvalidInputError: if a node has a nontrivial first frame
    """
    r = data.rank
    orders = []
    components = []
    for split in data.components:
        a = split.degrees
        pairs = sorted(
            ((i, j) for i in range(r) for j in range(r)), key=lambda ij: a[ij[1]] - a[ij[0]]
        )
        orders.append(pairs)
        components.append(SplitType(tuple(a[i] - a[j] for i, j in pairs)))

    nodes = []
    for node in data.nodes:
        if node.first_frame is not None:
            raise InvalidInputError("End bundles need nodes with the identity first frame")
        g = node.gluing
        first_pairs, second_pairs = orders[node.first], orders[node.second]
        # (A G)_{kl} = sum_j A_{kj} G_{jl};  (G A)_{kl} = sum_i G_{ki} A_{il}
        right = tuple(
            tuple(g[j][l] if i == k else 0 for i, j in first_pairs) for k, l in first_pairs
        )
        left = tuple(
            tuple(g[k][i] if j == l else 0 for i, j in second_pairs) for k, l in first_pairs
        )
        nodes.append(
            TreeNode(node.first, node.second, node.first_point, node.second_point, left, right)
        )

    return TreeBundleData(tuple(components), tuple(nodes), field=data.field)
