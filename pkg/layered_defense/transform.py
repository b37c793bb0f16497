# -*- coding: utf-8 -*-
"""
Profile-preserving model transformations.

to_pmodel subdivides every edge of integer cost k into k unit-cost edges;
to_cmodel expands every vertex of integer prize k into k unit-prize vertices
joined by zero-cost edges. Both return the vertex correspondence so attacks
can be moved between the two systems. Paddings embed a model on T into a
supertree without changing the profile of lifted systems.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set, Tuple

from .core_model import ONE, ROOT, ZERO, Attack, Model, RootedTree, SecuritySystem, validate_tree
from .errors import (
    NonIntegerCost,
    NonIntegerPrize,
    NotARootedSubtreeOfSupertree,
    ZeroCost,
)
from .rational import denominator_lcm, format_rational, is_integral

logger = logging.getLogger(__name__)


def _fresh_name(base: str, taken: Set[str]) -> str:
    name = base
    while name in taken:
        name += "~"
    taken.add(name)
    return name


@dataclass(frozen=True)
class Subdivision:
    """
    Result of to_pmodel / to_cmodel

    Args:
        source: the input security system
        ss: the transformed security system
        vertex_map: new index of each original vertex
        groups: new vertex indices that stand for each original vertex (its copies or subdivision path)
    """
    source: SecuritySystem
    ss: SecuritySystem
    vertex_map: Tuple[int, ...]
    groups: Tuple[Tuple[int, ...], ...]

    def lift(self, attack: Attack) -> Attack:
        """Attack on the new tree buying the same original edges"""
        return Attack.of(j for i in attack.edges for j in self.groups[i])

    def project(self, attack: Attack) -> Attack:
        """Original edges whose head vertex is reached by the attack"""
        return Attack.of(i for i, j in enumerate(self.vertex_map) if j in attack.edges)

    def correspondence(self) -> Dict[str, List[str]]:
        names = self.ss.tree.vertices
        return {self.source.tree.vertices[i]: [names[j] for j in group] for i, group in enumerate(self.groups)}


def to_pmodel(ss: SecuritySystem) -> Subdivision:
    """
    Replace every edge of cost k by a path of k unit-cost edges

    Interior vertices are named "<head>~1".."<head>~(k-1)" and carry prize 0;
    the original head keeps its prize at the bottom of the path.
    """
    for name, cost in zip(ss.tree.vertices, ss.cost):
        if not is_integral(cost):
            raise NonIntegerCost(f"Cost of edge into {name!r} is {format_rational(cost)}; scale costs first")
        if cost == 0:
            raise ZeroCost(f"Edge into {name!r} has cost 0; contract zero-cost edges first")

    tree = ss.tree
    taken = {tree.root, *tree.vertices}
    edges: List[Tuple[str, str]] = []
    prizes: List[Fraction] = []
    groups: List[List[int]] = []
    for i, (tail, head) in enumerate(tree.edges):
        group = []
        previous = tail
        for step in range(1, int(ss.cost[i])):
            interior = _fresh_name(f"{head}~{step}", taken)
            edges.append((previous, interior))
            prizes.append(ZERO)
            group.append(len(edges) - 1)
            previous = interior
        edges.append((previous, head))
        prizes.append(ss.prize[i])
        group.append(len(edges) - 1)
        groups.append(group)

    new_tree = validate_tree(edges, tree.root)
    result = SecuritySystem(new_tree, tuple([ONE] * new_tree.n), tuple(prizes))
    logger.info(f"Subdivided {tree.n} edges into {new_tree.n} unit-cost edges")
    return Subdivision(ss, result, tuple(g[-1] for g in groups), tuple(tuple(g) for g in groups))


def to_cmodel(ss: SecuritySystem) -> Subdivision:
    """
    Expand every vertex of prize k into k unit-prize vertices

    The original vertex keeps its incoming cost and prize 1; the other k-1
    copies hang below it as a zero-cost chain named "<vertex>~1".."<vertex>~(k-1)".
    A prize-0 vertex stays as a structural vertex with prize 0.
    """
    for name, prize in zip(ss.tree.vertices, ss.prize):
        if not is_integral(prize):
            raise NonIntegerPrize(f"Prize of {name!r} is {format_rational(prize)}; scale prizes first")

    tree = ss.tree
    taken = {tree.root, *tree.vertices}
    edges: List[Tuple[str, str]] = list(tree.edges)
    costs: List[Fraction] = list(ss.cost)
    prizes: List[Fraction] = [min(p, ONE) for p in ss.prize]
    groups: List[List[int]] = [[i] for i in range(tree.n)]
    for i, head in enumerate(tree.vertices):
        previous = head
        for step in range(1, int(ss.prize[i])):
            copy = _fresh_name(f"{head}~{step}", taken)
            edges.append((previous, copy))
            costs.append(ZERO)
            prizes.append(ONE)
            groups[i].append(len(edges) - 1)
            previous = copy

    new_tree = validate_tree(edges, tree.root)
    result = SecuritySystem(new_tree, tuple(costs), tuple(prizes))
    logger.info(f"Expanded {tree.n} vertices into {new_tree.n} vertices with prizes in {{0, 1}}")
    return Subdivision(ss, result, tuple(range(tree.n)), tuple(tuple(g) for g in groups))


@dataclass(frozen=True)
class Contraction:
    """
    Result of contract_zero_cost_edges

    Args:
        ss: contracted security system
        free_prize: prize merged into the root, collected by every attack
        vertex_map: for each original vertex, the index of the surviving vertex it was merged into (ROOT if the root)
    """
    ss: SecuritySystem
    free_prize: Fraction
    vertex_map: Tuple[int, ...]


def contract_zero_cost_edges(ss: SecuritySystem) -> Contraction:
    """Merge the head of every zero-cost edge into its tail; maxp(B) = free_prize + maxp'(B)"""
    tree = ss.tree
    representative: List[int] = [ROOT] * tree.n
    for vertex in tree.bfs_order():
        parent = tree.parents[vertex]
        if ss.cost[vertex] == 0:
            representative[vertex] = ROOT if parent == ROOT else representative[parent]
        else:
            representative[vertex] = vertex

    survivors = [v for v in range(tree.n) if representative[v] == v]
    position = {v: j for j, v in enumerate(survivors)}
    merged = [ZERO] * len(survivors)
    free_prize = ZERO
    for vertex in range(tree.n):
        target = representative[vertex]
        if target == ROOT:
            free_prize += ss.prize[vertex]
        else:
            merged[position[target]] += ss.prize[vertex]

    edges = []
    for v in survivors:
        parent = tree.parents[v]
        tail = ROOT if parent == ROOT else representative[parent]
        edges.append((tree.name(tail), tree.vertices[v]))
    new_tree = validate_tree(edges, tree.root)
    contracted = SecuritySystem(new_tree, tuple(ss.cost[v] for v in survivors), tuple(merged))
    vertex_map = tuple(ROOT if r == ROOT else position[r] for r in representative)
    logger.info(f"Contracted {tree.n - len(survivors)} zero-cost edges")
    return Contraction(contracted, free_prize, vertex_map)


def scale_costs_to_integers(ss: SecuritySystem) -> Tuple[SecuritySystem, int]:
    """Multiply costs by the LCM of their denominators; budgets scale by the same factor"""
    factor = denominator_lcm(ss.cost)
    return ss.with_costs(c * factor for c in ss.cost), factor


def scale_prizes_to_integers(ss: SecuritySystem) -> Tuple[SecuritySystem, int]:
    """Multiply prizes by the LCM of their denominators; maxp scales by the same factor"""
    factor = denominator_lcm(ss.prize)
    return ss.with_prizes(p * factor for p in ss.prize), factor


def _embedding(tree: RootedTree, supertree: RootedTree,
               embedding: Optional[Mapping[str, str]]) -> List[int]:
    """Supertree index of every vertex of tree, checking root and parents are preserved"""
    embedding = dict(embedding or {})
    embedding.setdefault(tree.root, tree.root)
    if embedding[tree.root] != supertree.root:
        raise NotARootedSubtreeOfSupertree("The root must map to the supertree's root")
    images = []
    for name in tree.vertices:
        image = embedding.get(name, name)
        if image not in supertree.vertices:
            raise NotARootedSubtreeOfSupertree(f"Vertex {name!r} has no image in the supertree")
        images.append(supertree.index(image))
    if len(set(images)) != len(images):
        raise NotARootedSubtreeOfSupertree("Embedding is not injective")
    for i, parent in enumerate(tree.parents):
        expected = ROOT if parent == ROOT else images[parent]
        if supertree.parents[images[i]] != expected:
            raise NotARootedSubtreeOfSupertree(
                f"Edge into {tree.vertices[i]!r} is not preserved by the supertree")
    return images


def pad_zero_prizes(model: Model, supertree: RootedTree,
                    embedding: Optional[Mapping[str, str]] = None) -> Model:
    """P-model on the supertree: unit costs everywhere, prizes P plus zeros"""
    _embedding(model.tree, supertree, embedding)
    extra = supertree.n - model.tree.n
    return Model(supertree, tuple([ONE] * supertree.n), model.prizes + tuple([ZERO] * extra))


def default_pad_cost(tree: RootedTree) -> Fraction:
    return Fraction(tree.n + 1)


def pad_infinite_costs(model: Model, supertree: RootedTree,
                       embedding: Optional[Mapping[str, str]] = None,
                       pad_cost: Optional[Fraction] = None) -> Model:
    """C-model on the supertree: unit prizes everywhere, new edges cost |E(T)|+1 unless pad_cost is given"""
    _embedding(model.tree, supertree, embedding)
    pad = default_pad_cost(model.tree) if pad_cost is None else Fraction(pad_cost)
    extra = supertree.n - model.tree.n
    return Model(supertree, model.costs + tuple([pad] * extra), tuple([ONE] * supertree.n))


def lift_to_supertree(ss: SecuritySystem, supertree: RootedTree,
                      embedding: Optional[Mapping[str, str]] = None,
                      new_cost: Fraction = ONE, new_prize: Fraction = ZERO) -> SecuritySystem:
    """Copy an assignment onto the embedded vertices; every other vertex gets (new_cost, new_prize)"""
    images = _embedding(ss.tree, supertree, embedding)
    cost = [Fraction(new_cost)] * supertree.n
    prize = [Fraction(new_prize)] * supertree.n
    for i, j in enumerate(images):
        cost[j], prize[j] = ss.cost[i], ss.prize[i]
    return SecuritySystem(supertree, tuple(cost), tuple(prize))
