# -*- coding: utf-8 -*-
"""
Rooted trees, cyber-security models, security systems and attacks.

Vertices are stored in input order as u_1..u_n and edge e_i is identified
with its head u_i. Internally both are addressed by the 0-based index i-1;
the root has no index and is written as ROOT wherever a parent is expected.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from .errors import (
    CycleDetected,
    IndexOutOfRange,
    LengthMismatch,
    MultipleParents,
    NegativeWeight,
    NotARootedSubtree,
    UnknownRoot,
    UnreachableVertex,
)
from .rational import RationalLike, format_rational, parse_rational

logger = logging.getLogger(__name__)

ROOT = -1

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class RootedTree:
    """
    Directed tree with a designated root

    Args:
        root: name of the root vertex
        vertices: names of the non-root vertices u_1..u_n
        parents: parent index of each non-root vertex (ROOT for root children)
    """
    root: str
    vertices: Tuple[str, ...]
    parents: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def children(self) -> Tuple[Tuple[int, ...], ...]:
        kids: List[List[int]] = [[] for _ in self.vertices]
        for i, parent in enumerate(self.parents):
            if parent != ROOT:
                kids[parent].append(i)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def root_children(self) -> Tuple[int, ...]:
        return tuple(i for i, parent in enumerate(self.parents) if parent == ROOT)

    def children_of(self, vertex: int) -> Tuple[int, ...]:
        """Children of a vertex index, or of the root when vertex is ROOT"""
        if vertex == ROOT:
            return self.root_children
        return self.children[vertex]

    @cached_property
    def levels(self) -> Tuple[int, ...]:
        levels = [0] * self.n
        for i in self.bfs_order():
            parent = self.parents[i]
            levels[i] = 1 if parent == ROOT else levels[parent] + 1
        return tuple(levels)

    @property
    def depth(self) -> int:
        return max(self.levels, default=0)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise IndexOutOfRange(f"Unknown non-root vertex: {name!r}") from None

    def name(self, vertex: int) -> str:
        return self.root if vertex == ROOT else self.vertices[vertex]

    @property
    def edges(self) -> Tuple[Tuple[str, str], ...]:
        """Edges e_1..e_n as (tail, head) name pairs"""
        return tuple((self.name(p), v) for v, p in zip(self.vertices, self.parents))

    def bfs_order(self) -> List[int]:
        """Non-root vertex indices in breadth-first order, siblings in index order"""
        order: List[int] = []
        queue = deque(self.root_children)
        while queue:
            vertex = queue.popleft()
            order.append(vertex)
            queue.extend(self.children[vertex])
        return order

    def postorder(self) -> List[int]:
        return list(reversed(self.bfs_order()))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_node(self.root, is_root=True)
        for name in self.vertices:
            graph.add_node(name, is_root=False)
        graph.add_edges_from(self.edges)
        return graph

    def extended(self, extra_edges: Iterable[Tuple[str, str]]) -> "RootedTree":
        """Supertree obtained by appending edges after e_1..e_n"""
        return validate_tree(list(self.edges) + list(extra_edges), self.root)

    def reordered(self, order: Sequence[int]) -> "RootedTree":
        """Same tree with u_1..u_n listed in the given index order"""
        position = {old: new for new, old in enumerate(order)}
        parents = tuple(ROOT if self.parents[old] == ROOT else position[self.parents[old]]
                        for old in order)
        return RootedTree(self.root, tuple(self.vertices[old] for old in order), parents)


def validate_tree(edges: Sequence[Tuple[str, str]], root: str) -> RootedTree:
    """
    Build a RootedTree from (parent, child) pairs, keeping input order

    Args:
        edges: edge pairs e_1..e_n; may be empty for a root-only tree
        root: name of the root vertex

    Returns:
        RootedTree whose u_i is the head of the i-th input edge
    """
    if not isinstance(root, str) or not root:
        raise UnknownRoot(f"Root must be a non-empty vertex name, got {root!r}")
    edges = [(str(tail), str(head)) for tail, head in edges]

    for tail, head in edges:
        if tail == head:
            raise CycleDetected(f"Self-loop at vertex {tail!r}")

    heads = Counter(head for _, head in edges)
    repeated = [name for name, count in heads.items() if count > 1]
    if repeated:
        raise MultipleParents(f"Vertex {repeated[0]!r} has more than one parent")

    graph = nx.DiGraph()
    graph.add_node(root)
    graph.add_edges_from(edges)
    try:
        cycle = nx.find_cycle(graph)
        raise CycleDetected(f"Cycle through vertex {cycle[0][0]!r}")
    except nx.NetworkXNoCycle:
        pass

    if edges and root not in {v for edge in edges for v in edge}:
        raise UnknownRoot(f"Root {root!r} does not appear in any edge")

    reachable = nx.descendants(graph, root)
    for tail, head in edges:
        if head not in reachable:
            raise UnreachableVertex(f"Vertex {head!r} is not reachable from root {root!r}")

    vertices = tuple(head for _, head in edges)
    index = {name: i for i, name in enumerate(vertices)}
    parents = tuple(ROOT if tail == root else index[tail] for tail, _ in edges)
    logger.debug(f"Validated tree with root {root!r} and {len(vertices)} edges")
    return RootedTree(root, vertices, parents)


def _as_weights(values: Iterable[RationalLike], n: int, what: str) -> Tuple[Fraction, ...]:
    weights = tuple(parse_rational(v) for v in values)
    if len(weights) != n:
        raise LengthMismatch(f"Expected {n} {what}, got {len(weights)}")
    for w in weights:
        if w < 0:
            raise NegativeWeight(f"{what} must be nonnegative, got {format_rational(w)}")
    return weights


@dataclass(frozen=True)
class Model:
    """Cyber-security model (T, C, P); multisets are kept sorted ascending"""
    tree: RootedTree
    costs: Tuple[Fraction, ...]
    prizes: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'costs', tuple(sorted(_as_weights(self.costs, self.tree.n, "costs"))))
        object.__setattr__(self, 'prizes', tuple(sorted(_as_weights(self.prizes, self.tree.n, "prizes"))))

    @property
    def is_p_model(self) -> bool:
        return all(c == ONE for c in self.costs)

    @property
    def is_c_model(self) -> bool:
        return all(p == ONE for p in self.prizes)


@dataclass(frozen=True)
class SecuritySystem:
    """Assignment of costs to edges and prizes to non-root vertices, index-aligned with u_1..u_n"""
    tree: RootedTree
    cost: Tuple[Fraction, ...]
    prize: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'cost', _as_weights(self.cost, self.tree.n, "costs"))
        object.__setattr__(self, 'prize', _as_weights(self.prize, self.tree.n, "prizes"))

    @property
    def is_unit_cost(self) -> bool:
        return all(c == ONE for c in self.cost)

    @property
    def is_unit_prize(self) -> bool:
        return all(p == ONE for p in self.prize)

    def model(self) -> Model:
        return Model(self.tree, self.cost, self.prize)

    def with_costs(self, cost: Iterable[RationalLike]) -> "SecuritySystem":
        return SecuritySystem(self.tree, tuple(cost), self.prize)

    def with_prizes(self, prize: Iterable[RationalLike]) -> "SecuritySystem":
        return SecuritySystem(self.tree, self.cost, tuple(prize))

    def reordered(self, order: Sequence[int]) -> "SecuritySystem":
        return SecuritySystem(self.tree.reordered(order),
                              tuple(self.cost[i] for i in order),
                              tuple(self.prize[i] for i in order))


@dataclass(frozen=True)
class Attack:
    """Rooted subtree given by its 0-based edge indices; the empty set is the root-only attack"""
    edges: FrozenSet[int] = field(default_factory=frozenset)

    @classmethod
    def of(cls, edges: Iterable[int]) -> "Attack":
        return cls(frozenset(edges))

    @classmethod
    def from_heads(cls, tree: RootedTree, names: Iterable[str]) -> "Attack":
        return cls(frozenset(tree.index(name) for name in names))

    def __len__(self) -> int:
        return len(self.edges)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Fewest edges first, then lexicographic edge set"""
        return len(self.edges), tuple(sorted(self.edges))

    def heads(self, tree: RootedTree) -> List[str]:
        return [tree.vertices[i] for i in sorted(self.edges)]


def is_rooted_subtree(tree: RootedTree, edges: Iterable[int]) -> bool:
    """True iff every selected edge hangs from the root or from another selected edge"""
    selected = set(edges.edges if isinstance(edges, Attack) else edges)
    for i in selected:
        if not 0 <= i < tree.n:
            raise IndexOutOfRange(f"Edge index {i} outside 0..{tree.n - 1}")
    return all(tree.parents[i] == ROOT or tree.parents[i] in selected for i in selected)


def _checked(ss: SecuritySystem, attack: Attack) -> FrozenSet[int]:
    if not is_rooted_subtree(ss.tree, attack.edges):
        raise NotARootedSubtree(f"Edges {sorted(attack.edges)} do not form a rooted subtree")
    return attack.edges


def attack_cost(ss: SecuritySystem, attack: Attack) -> Fraction:
    return sum((ss.cost[i] for i in _checked(ss, attack)), ZERO)


def attack_prize(ss: SecuritySystem, attack: Attack) -> Fraction:
    return sum((ss.prize[i] for i in _checked(ss, attack)), ZERO)


def same_multisets(first: SecuritySystem, second: SecuritySystem) -> bool:
    return (first.tree == second.tree
            and sorted(first.cost) == sorted(second.cost)
            and sorted(first.prize) == sorted(second.prize))

