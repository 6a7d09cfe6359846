# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
r"""Broken combs: a base :math:`\mathbb{P}^1` with trees of rational tails attached.

A broken comb :math:`C = B \cup \bigcup T_i` carries a bundle :math:`E_C` whose restriction
to every component is split. Each tooth :math:`T_i` is a tree of tail components meeting the
base in a single root point. Nodes are glued either by a general matrix or by an explicit
one stored on the edge.
"""

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from ..exceptions import HypothesisError, InvalidInputError
from ..splitcalc import SplitType

__all__ = [
    "CombSpec",
    "Component",
    "Edge",
    "GluingMode",
    "Role",
    "ToothNode",
    "assemble_comb",
    "build_comb",
]

Matrix = tuple[tuple[int, ...], ...]


class Role(Enum):
    """Role of a component in a comb"""

    BASE = "base"
    TAIL = "tail"


class GluingMode(Enum):
    """How the fibres at a node are identified"""

    GENERAL = "general"
    r"""A general element of :math:`GL_r`"""

    EXPLICIT = "explicit"
    """The matrix stored on the edge"""


@dataclass(frozen=True)
class Component:
    """A component of a comb with the splitting type of the bundle on it"""

    name: str
    role: Role
    split: SplitType

    def __post_init__(self):
        object.__setattr__(self, "role", Role(self.role))


@dataclass(frozen=True)
class Edge:
    """A node between two components.

    Args:
        parent: Name of the component nearer the base

        child: Name of the component further from the base

        mode: Gluing mode of the node

        gluing: The gluing matrix, required for explicit gluing
    """

    parent: str
    child: str
    mode: GluingMode = GluingMode.GENERAL
    gluing: Matrix | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", GluingMode(self.mode))
        if self.mode is GluingMode.EXPLICIT and self.gluing is None:
            raise InvalidInputError(f"Explicit edge {self.parent}-{self.child} has no gluing")
        if self.gluing is not None:
            gluing = tuple(tuple(int(x) for x in row) for row in self.gluing)
            object.__setattr__(self, "gluing", gluing)


@dataclass(frozen=True)
class ToothNode:
    """A tooth given as a tree: a splitting type and the subtrees hanging off it"""

    split: SplitType
    children: tuple["ToothNode", ...] = ()


@dataclass(frozen=True)
class CombSpec:
    """A validated broken comb. Build with :func:`build_comb` or :func:`assemble_comb`."""

    components: tuple[Component, ...]
    edges: tuple[Edge, ...]
    _children: dict[str, tuple[str, ...]] = field(repr=False, compare=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.components[0].split.rank

    @property
    def base(self) -> Component:
        return next(c for c in self.components if c.role is Role.BASE)

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise InvalidInputError(f"No component named {name!r}")

    def children(self, name: str) -> tuple[str, ...]:
        """Components attached to ``name`` on the side away from the base"""
        return self._children.get(name, ())

    @property
    def roots(self) -> tuple[str, ...]:
        """Tooth roots, i.e. tail components attached to the base"""
        return self.children(self.base.name)

    def tooth(self, root: str) -> tuple[str, ...]:
        """Names of the components of the tooth with the given root, root first"""
        names = [root]
        queue = deque([root])
        while queue:
            for child in self.children(queue.popleft()):
                names.append(child)
                queue.append(child)
        return tuple(names)

    def tooth_degree(self, root: str) -> int:
        r"""Total degree :math:`k_i = \deg E_{T_i}` of a tooth"""
        return sum(self.component(name).split.c1 for name in self.tooth(root))

    @property
    def k(self) -> int:
        """Sum of all tooth degrees"""
        return sum(self.tooth_degree(root) for root in self.roots)

    def hypothesis_failures(self) -> list[str]:
        """Tail components violating the smoothing hypotheses.

        Every tail component must be balanced. A tooth with an explicitly glued node must
        consist of twists of the trivial bundle.
        """
        failures = []
        explicit_teeth = set()
        tooth_of = {name: root for root in self.roots for name in self.tooth(root)}
        for edge in self.edges:
            if edge.mode is GluingMode.EXPLICIT:
                explicit_teeth.add(tooth_of.get(edge.child))

        for root in self.roots:
            for name in self.tooth(root):
                split = self.component(name).split
                if not split.is_balanced:
                    failures.append(f"tail {name} has unbalanced type {split}")
                elif root in explicit_teeth and split.max_degree != split.min_degree:
                    failures.append(
                        f"tail {name} is explicitly glued but {split} is not a twist of trivial"
                    )
        return failures


def assemble_comb(components: Sequence[Component], edges: Sequence[Edge]) -> CombSpec:
    """Validates components and edges and assembles them into a comb.

    Args:
        components: Components, exactly one of them with the base role

        edges: Nodes between the components

    Returns:
        The comb

    Raises:
        InvalidInputError: on duplicate names, unknown names, rank mismatches, wrongly
            shaped gluing matrices, several or no bases, cycles, disconnected pieces or
            edges pointing towards the base
    """
    components = tuple(components)
    edges = tuple(edges)
    if not components:
        raise InvalidInputError("A comb needs at least one component")

    names = [c.name for c in components]
    if len(set(names)) != len(names):
        raise InvalidInputError(f"Component names must be unique, got {names}")

    bases = [c.name for c in components if c.role is Role.BASE]
    if len(bases) != 1:
        raise InvalidInputError(f"A comb has exactly one base, got {bases}")

    ranks = {c.split.rank for c in components}
    if len(ranks) != 1:
        raise InvalidInputError(f"Components must share one rank, got ranks {sorted(ranks)}")
    rank = ranks.pop()

    neighbours: dict[str, list[tuple[str, Edge]]] = {name: [] for name in names}
    for edge in edges:
        for end in (edge.parent, edge.child):
            if end not in neighbours:
                raise InvalidInputError(f"Edge refers to unknown component {end!r}")
        if edge.parent == edge.child:
            raise InvalidInputError(f"Edge joins {edge.parent!r} to itself")
        if edge.gluing is not None and (
            len(edge.gluing) != rank or any(len(row) != rank for row in edge.gluing)
        ):
            raise InvalidInputError(f"Gluing of {edge.parent}-{edge.child} is not {rank}x{rank}")
        neighbours[edge.parent].append((edge.child, edge))
        neighbours[edge.child].append((edge.parent, edge))

    # orient every edge away from the base
    children: dict[str, list[str]] = {name: [] for name in names}
    oriented: list[Edge] = []
    seen = {bases[0]}
    queue = deque([bases[0]])
    while queue:
        name = queue.popleft()
        for other, edge in neighbours[name]:
            if other in seen:
                if not any(e is edge for e in oriented):
                    raise InvalidInputError(f"Edge {edge.parent}-{edge.child} closes a cycle")
                continue
            if edge.parent != name:
                raise InvalidInputError(f"Edge {edge.parent}-{edge.child} points towards the base")
            seen.add(other)
            children[name].append(other)
            oriented.append(edge)
            queue.append(other)

    if len(seen) != len(components):
        missing = sorted(set(names) - seen)
        raise InvalidInputError(f"Components {missing} are not connected to the base")

    return CombSpec(
        components,
        tuple(oriented),
        {name: tuple(kids) for name, kids in children.items() if kids},
    )


def build_comb(
    base: SplitType,
    teeth: Sequence[SplitType | ToothNode | Sequence[SplitType]] = (),
    mode: GluingMode | str = GluingMode.GENERAL,
) -> CombSpec:
    """Builds a comb from a base type and a list of teeth.

    A tooth is a single splitting type, a chain of splitting types starting at the root, or
    a :class:`ToothNode` tree. The base is named ``"B"`` and tooth components ``"T1"``,
    ``"T1.1"``, ... by position.

    Args:
        base: Splitting type on the base

        teeth: The teeth

        mode: Gluing mode of every node. Explicit combs are glued by the identity.

    Returns:
        The comb

    Raises:
        InvalidInputError: if the ranks differ
        HypothesisError: if a tail component violates the smoothing hypotheses

    Examples:
    >>> comb = build_comb(SplitType((0, 0)), [SplitType((0, -1))] * 5)
    >>> comb.k, len(comb.roots)
    (-5, 5)
    """
    mode = GluingMode(mode)
    components = [Component("B", Role.BASE, base)]
    edges = []

    def attach(node: ToothNode, parent: str, name: str):
        components.append(Component(name, Role.TAIL, node.split))
        gluing = None
        if mode is GluingMode.EXPLICIT:
            gluing = tuple(tuple(int(i == j) for j in range(base.rank)) for i in range(base.rank))
        edges.append(Edge(parent, name, mode, gluing))
        for i, child in enumerate(node.children, start=1):
            attach(child, name, f"{name}.{i}")

    for i, tooth in enumerate(teeth, start=1):
        attach(_as_tooth(tooth), "B", f"T{i}")

    comb = assemble_comb(components, edges)
    if failures := comb.hypothesis_failures():
        raise HypothesisError("; ".join(failures))
    return comb


def _as_tooth(tooth) -> ToothNode:
    if isinstance(tooth, ToothNode):
        return tooth
    if isinstance(tooth, SplitType):
        return ToothNode(tooth)
    chain = list(tooth)
    if not chain:
        raise InvalidInputError("A tooth needs at least one component")
    node = ToothNode(chain[-1])
    for split in reversed(chain[:-1]):
        node = ToothNode(split, (node,))
    return node
