# -*- coding: utf-8 -*-
"""
Security-system construction and comparison.

Builds good security systems, enumerates neighbor moves, detects improved
systems and provides the optimal constructors for rooted paths, rooted
stars, rooted 3-caterpillars and rooted 4-spiders.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .attack_solver import Dominance, MaxPrizeProfile, maxp_profile, profile_leq
from .config import DEFAULT_LIMITS, SolverLimits
from .core_model import ROOT, Model, SecuritySystem, same_multisets
from .errors import MultisetMismatch, NotUnitCost, NotUnitPrize, WrongTreeClass
from .taxonomy import TreeTag, classify, is_rooted_path, is_rooted_star

logger = logging.getLogger(__name__)


class MoveKind(Enum):
    PRIZE_SWAP = "prize-swap"
    COST_SWAP = "cost-swap"


@dataclass(frozen=True)
class NeighborMove:
    """
    A single local exchange

    A prize swap exchanges the prizes at both ends of an edge (ROOT as the
    tail means the move is the identity). A cost swap exchanges the costs
    of an edge and its parent edge.
    """
    kind: MoveKind
    indices: Tuple[int, int]


def neighbors(ss: SecuritySystem) -> List[Tuple[NeighborMove, SecuritySystem]]:
    tree = ss.tree
    moves: List[Tuple[NeighborMove, SecuritySystem]] = []
    for child, parent in enumerate(tree.parents):
        move = NeighborMove(MoveKind.PRIZE_SWAP, (parent, child))
        if parent == ROOT:
            moves.append((move, ss))
            continue
        prize = list(ss.prize)
        prize[parent], prize[child] = prize[child], prize[parent]
        moves.append((move, ss.with_prizes(prize)))
    for child, parent in enumerate(tree.parents):
        if parent == ROOT:
            continue
        cost = list(ss.cost)
        cost[parent], cost[child] = cost[child], cost[parent]
        moves.append((NeighborMove(MoveKind.COST_SWAP, (parent, child)), ss.with_costs(cost)))
    return moves


def _assign(order: Sequence[int], values: Sequence[Fraction]) -> List[Fraction]:
    assigned = [Fraction(0)] * len(order)
    for position, vertex in enumerate(order):
        assigned[vertex] = values[position]
    return assigned


def good_ss(model: Model) -> SecuritySystem:
    """Costs descending and prizes ascending, assigned in breadth-first order"""
    order = model.tree.bfs_order()
    costs = sorted(model.costs, reverse=True)
    prizes = sorted(model.prizes)
    return SecuritySystem(model.tree, tuple(_assign(order, costs)), tuple(_assign(order, prizes)))


def satisfies_order_conditions(ss: SecuritySystem) -> bool:
    """Costs never increase and prizes never decrease from a vertex to its children"""
    for child, parent in enumerate(ss.tree.parents):
        if parent == ROOT:
            continue
        if ss.cost[parent] < ss.cost[child] or ss.prize[parent] > ss.prize[child]:
            return False
    return True


@dataclass(frozen=True)
class Improvement:
    """Truthy when the candidate is pointwise no worse and strictly better at `budget`"""
    improved: bool
    budget: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.improved


def _improvement(candidate: MaxPrizeProfile, baseline: MaxPrizeProfile) -> Improvement:
    report = profile_leq(candidate, baseline)
    if report.relation is Dominance.FIRST_LOWER:
        return Improvement(True, report.first_lower_at)
    return Improvement(False)


def is_improved(candidate: SecuritySystem, baseline: SecuritySystem,
                limits: SolverLimits = DEFAULT_LIMITS) -> Improvement:
    if not same_multisets(candidate, baseline):
        raise MultisetMismatch("Security systems differ in tree or in their cost/prize multisets")
    return _improvement(maxp_profile(candidate, limits), maxp_profile(baseline, limits))


def is_good(ss: SecuritySystem, limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    baseline = maxp_profile(ss, limits)
    for move, candidate in neighbors(ss):
        if candidate is ss:
            continue
        if _improvement(maxp_profile(candidate, limits), baseline):
            logger.debug(f"Neighbor {move} improves the security system")
            return False
    return True


def optimal_ss_path(model: Model) -> SecuritySystem:
    if not is_rooted_path(model.tree):
        raise WrongTreeClass("optimal_ss_path requires a rooted path")
    return good_ss(model)


def optimal_ss_star(model: Model) -> SecuritySystem:
    """i-th cheapest edge carries the i-th smallest prize"""
    if not is_rooted_star(model.tree):
        raise WrongTreeClass("optimal_ss_star requires a rooted star")
    return SecuritySystem(model.tree, tuple(sorted(model.costs)), tuple(sorted(model.prizes)))


def _canonical(model: Model, tag: TreeTag) -> Tuple[List[int], int]:
    tree_class = classify(model.tree)
    if tree_class.tag is not tag:
        raise WrongTreeClass(f"Expected a {tag.value}, got {tree_class.describe()}")
    return list(tree_class.relabeling), tree_class.k


def _spider_values(values: Sequence[Fraction], k: int) -> List[Fraction]:
    """Level-1 positions take values[0..k-1]; leaf u_{k+i} takes values[n-i]"""
    n = len(values)
    return [values[j] if j < k else values[n + k - 1 - j] for j in range(n)]


def optimal_ss_caterpillar_P(model: Model) -> SecuritySystem:
    """Prizes ascending by canonical index; the branching vertex gets the smallest"""
    order, _ = _canonical(model, TreeTag.CATERPILLAR)
    if not model.is_p_model:
        raise NotUnitCost("The caterpillar P-model constructor requires unit costs")
    return SecuritySystem(model.tree, model.costs, tuple(_assign(order, sorted(model.prizes))))


def optimal_ss_spider_P(model: Model) -> SecuritySystem:
    order, k = _canonical(model, TreeTag.SPIDER)
    if not model.is_p_model:
        raise NotUnitCost("The spider P-model constructor requires unit costs")
    prizes = _spider_values(sorted(model.prizes), k)
    return SecuritySystem(model.tree, model.costs, tuple(_assign(order, prizes)))


def optimal_ss_caterpillar_C(model: Model) -> SecuritySystem:
    """Costs descending by canonical edge index; the branching edge gets the largest"""
    order, _ = _canonical(model, TreeTag.CATERPILLAR)
    if not model.is_c_model:
        raise NotUnitPrize("The caterpillar C-model constructor requires unit prizes")
    return SecuritySystem(model.tree, tuple(_assign(order, sorted(model.costs, reverse=True))), model.prizes)


def optimal_ss_spider_C(model: Model) -> SecuritySystem:
    order, k = _canonical(model, TreeTag.SPIDER)
    if not model.is_c_model:
        raise NotUnitPrize("The spider C-model constructor requires unit prizes")
    costs = _spider_values(sorted(model.costs, reverse=True), k)
    return SecuritySystem(model.tree, tuple(_assign(order, costs)), model.prizes)


def check_level1_necessity(ss: SecuritySystem) -> bool:
    """Root edges carry exactly the |V_1| largest costs"""
    root_costs = sorted(ss.cost[i] for i in ss.tree.root_children)
    if not root_costs:
        return True
    return root_costs == sorted(ss.cost)[-len(root_costs):]


def optimal_ss(model: Model) -> SecuritySystem:
    """
    Optimal security system from the constructor matching the tree class

    Raises:
        WrongTreeClass: no constructor applies to this tree or model flavor
    """
    tree_class = classify(model.tree)
    tag = tree_class.tag
    logger.info(f"Building optimal SS for a {tree_class.describe()}")
    if tag is TreeTag.ROOTED_PATH:
        return optimal_ss_path(model)
    if tag is TreeTag.ROOTED_STAR:
        return optimal_ss_star(model)
    if tag is TreeTag.CATERPILLAR and model.is_p_model:
        return optimal_ss_caterpillar_P(model)
    if tag is TreeTag.CATERPILLAR and model.is_c_model:
        return optimal_ss_caterpillar_C(model)
    if tag is TreeTag.SPIDER and model.is_p_model:
        return optimal_ss_spider_P(model)
    if tag is TreeTag.SPIDER and model.is_c_model:
        return optimal_ss_spider_C(model)
    raise WrongTreeClass(f"No constructor for a general model on a {tree_class.describe()}")
