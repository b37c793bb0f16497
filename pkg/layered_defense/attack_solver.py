# -*- coding: utf-8 -*-
"""
Optimal attacks and the max-prize step function.

maxp(B) is the largest prize of a rooted subtree whose cost is at most B.
Three solvers are provided: exhaustive enumeration of rooted subtrees, an
exact-size tree knapsack for unit costs (and, dually, unit prizes), and a
pseudo-polynomial knapsack over scaled integer budgets for rational costs.
"""

import logging
from bisect import bisect_right
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import floor
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from .config import DEFAULT_LIMITS, SolverLimits
from .core_model import ROOT, ZERO, Attack, RootedTree, SecuritySystem
from .errors import (
    BudgetCeilingExceeded,
    InvalidBudget,
    NotUnitCost,
    TooLarge,
    Unreachable,
)
from .rational import RationalLike, denominator_lcm, format_rational, parse_rational

logger = logging.getLogger(__name__)


def _budget(value: RationalLike) -> Fraction:
    budget = parse_rational(value)
    if budget < 0:
        raise InvalidBudget(f"Budget must be nonnegative, got {format_rational(budget)}")
    return budget


@dataclass(frozen=True)
class Breakpoint:
    threshold: Fraction
    value: Fraction
    witness: Optional[Attack] = field(default=None, compare=False)


@dataclass(frozen=True)
class MaxPrizeProfile:
    """
    Step function B -> maxp(B) as its breakpoints

    maxp(B) is the value of the last breakpoint whose threshold is <= B.
    The first threshold is 0; its value is the prize reachable for free.
    """
    breakpoints: Tuple[Breakpoint, ...]

    def __post_init__(self):
        points = self.breakpoints
        if not points or points[0].threshold != 0:
            raise ValueError("Profile must start at threshold 0")
        for before, after in zip(points, points[1:]):
            if not (before.threshold < after.threshold and before.value < after.value):
                raise ValueError("Profile thresholds and values must be strictly increasing")

    @classmethod
    def from_points(cls, points: Sequence[Tuple[Fraction, Fraction]]) -> "MaxPrizeProfile":
        """Profile of a non-decreasing step function sampled at its candidate thresholds"""
        breakpoints: List[Breakpoint] = []
        for threshold, value in sorted(points):
            if not breakpoints or value > breakpoints[-1].value:
                breakpoints.append(Breakpoint(Fraction(threshold), Fraction(value)))
        return cls(tuple(breakpoints))

    @property
    def thresholds(self) -> Tuple[Fraction, ...]:
        return tuple(b.threshold for b in self.breakpoints)

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(b.value for b in self.breakpoints)

    @property
    def points(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return tuple((b.threshold, b.value) for b in self.breakpoints)

    def evaluate(self, budget: RationalLike) -> Fraction:
        budget = _budget(budget)
        return self.breakpoints[bisect_right(self.thresholds, budget) - 1].value

    def witness_at(self, budget: RationalLike) -> Optional[Attack]:
        budget = _budget(budget)
        return self.breakpoints[bisect_right(self.thresholds, budget) - 1].witness

    def to_frame(self, tree: Optional[RootedTree] = None) -> pd.DataFrame:
        """Breakpoint table with exact rational text; witness heads listed when a tree is given"""
        rows = []
        for point in self.breakpoints:
            row = {
                'threshold': format_rational(point.threshold),
                'value': format_rational(point.value),
            }
            if tree is not None:
                row['witness'] = ' '.join(point.witness.heads(tree)) if point.witness else ''
            rows.append(row)
        return pd.DataFrame(rows)


def enumerate_attacks(tree: RootedTree, max_edges: Optional[int] = None,
                      limits: SolverLimits = DEFAULT_LIMITS) -> List[Attack]:
    """
    Every rooted subtree exactly once, ordered by size then lexicographic edge set

    Args:
        tree: tree to enumerate
        max_edges: optional bound on the number of edges per attack
        limits: size guard

    Returns:
        List of attacks, starting with the root-only attack
    """
    if tree.n > limits.max_bruteforce_n:
        logger.warning(f"Refusing to enumerate attacks on {tree.n} edges (guard {limits.max_bruteforce_n})")
        raise TooLarge(f"Tree has {tree.n} edges; attack enumeration is limited to "
                       f"{limits.max_bruteforce_n} (raise --max-n to override)")
    found: List[Attack] = []

    def extend(chosen: List[int], frontier: Tuple[int, ...]):
        if not frontier:
            found.append(Attack.of(chosen))
            return
        edge, rest = frontier[0], frontier[1:]
        extend(chosen, rest)
        if max_edges is None or len(chosen) < max_edges:
            extend(chosen + [edge], rest + tree.children[edge])

    extend([], tree.root_children)
    found.sort(key=Attack.sort_key)
    return found


def _scored_attacks(ss: SecuritySystem, limits: SolverLimits) -> Iterator[Tuple[Fraction, Fraction, Attack]]:
    for attack in enumerate_attacks(ss.tree, limits=limits):
        cost = sum((ss.cost[i] for i in attack.edges), ZERO)
        prize = sum((ss.prize[i] for i in attack.edges), ZERO)
        yield cost, prize, attack


def maxp_bruteforce(ss: SecuritySystem, budget: RationalLike,
                    limits: SolverLimits = DEFAULT_LIMITS) -> Tuple[Fraction, Attack]:
    """Best prize within budget by enumeration; ties go to fewest edges, then lexicographic"""
    budget = _budget(budget)
    best_value, best_attack = ZERO, Attack()
    for cost, prize, attack in _scored_attacks(ss, limits):
        if cost <= budget and prize > best_value:
            best_value, best_attack = prize, attack
    return best_value, best_attack


class SubtreeKnapsack:
    """
    Exact-size tree knapsack

    For every m, the best total weight of a rooted subtree with exactly m
    edges, where taking edge e_i earns weights[i]. Children are merged into
    their parent's table by max-plus (or min-plus) convolution, O(n^2) in all.
    """

    def __init__(self, tree: RootedTree, weights: Sequence[Fraction], maximize: bool = True):
        self.tree = tree
        self.weights = tuple(weights)
        self.maximize = maximize
        self._tables: Dict[int, List[Optional[Fraction]]] = {}
        self._history: Dict[int, List[Tuple[int, List[Tuple[int, int]]]]] = {}
        for vertex in tree.postorder():
            self._solve(vertex)
        self._solve(ROOT)

    def _better(self, candidate: Fraction, incumbent: Optional[Fraction]) -> bool:
        if incumbent is None:
            return True
        return candidate > incumbent if self.maximize else candidate < incumbent

    def _solve(self, vertex: int):
        table: List[Optional[Fraction]] = [ZERO]
        history = []
        for child in self.tree.children_of(vertex):
            child_table = self._tables[child]
            merged: List[Optional[Fraction]] = table + [None] * len(child_table)
            choice = [(s, -1) for s in range(len(merged))]
            for s, base in enumerate(table):
                if base is None:
                    continue
                for t, extra in enumerate(child_table):
                    if extra is None:
                        continue
                    candidate = base + extra + self.weights[child]
                    if self._better(candidate, merged[s + t + 1]):
                        merged[s + t + 1] = candidate
                        choice[s + t + 1] = (s, t)
            table = merged
            history.append((child, choice))
        self._tables[vertex] = table
        self._history[vertex] = history

    def value(self, m: int) -> Optional[Fraction]:
        table = self._tables[ROOT]
        return table[m] if 0 <= m < len(table) else None

    def attack(self, m: int) -> Attack:
        if self.value(m) is None:
            raise Unreachable(f"No rooted subtree with {m} edges exists")
        edges: List[int] = []
        pending = deque([(ROOT, m)])
        while pending:
            vertex, size = pending.pop()
            for child, choice in reversed(self._history[vertex]):
                previous, taken = choice[size]
                if taken >= 0:
                    edges.append(child)
                    pending.append((child, taken))
                size = previous
        return Attack.of(edges)


def _require_unit_cost(ss: SecuritySystem):
    if not ss.is_unit_cost:
        raise NotUnitCost("This solver requires every edge cost to be 1")


def maxp_unitcost_dp(ss: SecuritySystem, m: RationalLike) -> Tuple[Fraction, Attack]:
    """
    maxp with unit costs, i.e. the best prize over rooted subtrees with at most m edges

    Args:
        ss: security system whose costs are all 1
        m: edge budget; rational budgets are floored, budgets above n are clamped

    Returns:
        (value, witness attack with the fewest edges among the optimal ones;
        further ties follow merge order, not the lexicographic order of
        maxp_bruteforce)
    """
    _require_unit_cost(ss)
    m = min(floor(_budget(m)), ss.tree.n)
    knapsack = SubtreeKnapsack(ss.tree, ss.prize)
    best_size = 0
    for size in range(1, m + 1):
        if knapsack.value(size) > knapsack.value(best_size):
            best_size = size
    return knapsack.value(best_size), knapsack.attack(best_size)


def min_cost_subtree(tree: RootedTree, weights: Sequence[Fraction], m: int) -> Tuple[Fraction, Attack]:
    """Cheapest rooted subtree with exactly m edges; weights may be any rationals"""
    if not 0 <= m <= tree.n:
        raise Unreachable(f"No rooted subtree with {m} edges exists in a tree with {tree.n} edges")
    knapsack = SubtreeKnapsack(tree, [Fraction(w) for w in weights], maximize=False)
    return knapsack.value(m), knapsack.attack(m)


def maxp_integer_dp(ss: SecuritySystem, budget: RationalLike,
                    limits: SolverLimits = DEFAULT_LIMITS) -> Tuple[Fraction, Attack]:
    """
    maxp for rational costs via a knapsack over integer budgets

    Costs are scaled by the LCM of their denominators. Each vertex keeps the
    best prize for every scaled budget up to the cost of its whole subtree;
    a child is merged only at the budgets where its own table steps up.
    The witness is some optimal attack picked by merge order; only
    maxp_bruteforce breaks ties lexicographically.
    """
    budget = _budget(budget)
    scale = denominator_lcm(ss.cost)
    weights = [int(c * scale) for c in ss.cost]
    cap = min(floor(budget * scale), sum(weights))
    if cap > limits.dp_budget_ceiling:
        logger.warning(f"Scaled budget {cap} exceeds DP ceiling {limits.dp_budget_ceiling}")
        raise BudgetCeilingExceeded(f"Scaled budget {cap} exceeds the DP ceiling {limits.dp_budget_ceiling}")
    logger.debug(f"Integer DP with scale {scale} and {cap + 1} budget cells")

    tree = ss.tree
    tables: Dict[int, List[Fraction]] = {}
    totals: Dict[int, int] = {}
    history: Dict[int, List[Tuple[int, List[int]]]] = {}

    def at(table: List[Fraction], b: int) -> Fraction:
        return table[min(b, len(table) - 1)]

    for vertex in tree.postorder() + [ROOT]:
        table, total, steps = [ZERO], 0, []
        for child in tree.children_of(vertex):
            child_table = tables[child]
            total += weights[child] + totals[child]
            length = min(cap, total) + 1
            merged = [at(table, b) for b in range(length)]
            choice = [-1] * length
            rises = [t for t in range(len(child_table)) if t == 0 or child_table[t] > child_table[t - 1]]
            for t in rises:
                spent = t + weights[child]
                if spent >= length:
                    break
                gain = child_table[t] + ss.prize[child]
                for b in range(spent, length):
                    candidate = at(table, b - spent) + gain
                    if candidate > merged[b]:
                        merged[b] = candidate
                        choice[b] = spent
            table = merged
            steps.append((child, choice))
        tables[vertex], totals[vertex], history[vertex] = table, total, steps

    edges: List[int] = []
    pending = deque([(ROOT, cap)])
    while pending:
        vertex, b = pending.pop()
        for child, choice in reversed(history[vertex]):
            b = min(b, len(choice) - 1)
            spent = choice[b]
            if spent >= 0:
                edges.append(child)
                pending.append((child, spent - weights[child]))
                b -= spent
    return at(tables[ROOT], cap), Attack.of(edges)


def _unit_cost_profile(ss: SecuritySystem) -> MaxPrizeProfile:
    knapsack = SubtreeKnapsack(ss.tree, ss.prize)
    breakpoints = [Breakpoint(ZERO, ZERO, Attack())]
    for size in range(1, ss.tree.n + 1):
        value = knapsack.value(size)
        if value > breakpoints[-1].value:
            breakpoints.append(Breakpoint(Fraction(size), value, knapsack.attack(size)))
    return MaxPrizeProfile(tuple(breakpoints))


def _unit_prize_profile(ss: SecuritySystem) -> MaxPrizeProfile:
    knapsack = SubtreeKnapsack(ss.tree, ss.cost, maximize=False)
    thresholds = [knapsack.value(m) for m in range(ss.tree.n + 1)]
    breakpoints: List[Breakpoint] = []
    for m, threshold in enumerate(thresholds):
        if m < ss.tree.n and thresholds[m + 1] == threshold:
            continue
        breakpoints.append(Breakpoint(threshold, Fraction(m), knapsack.attack(m)))
    return MaxPrizeProfile(tuple(breakpoints))


def _bruteforce_profile(ss: SecuritySystem, limits: SolverLimits) -> MaxPrizeProfile:
    scored = sorted(_scored_attacks(ss, limits), key=lambda item: (item[0], -item[1], item[2].sort_key()))
    breakpoints: List[Breakpoint] = []
    for cost, prize, attack in scored:
        if not breakpoints or prize > breakpoints[-1].value:
            breakpoints.append(Breakpoint(cost, prize, attack))
    return MaxPrizeProfile(tuple(breakpoints))


def maxp_profile(ss: SecuritySystem, limits: SolverLimits = DEFAULT_LIMITS) -> MaxPrizeProfile:
    """
    Exact max-prize step function with a witness attack per breakpoint

    Unit-cost systems use the prize knapsack, unit-prize systems the cost
    knapsack (thresholds are the B_m values); anything else is enumerated.
    """
    if ss.is_unit_cost:
        logger.debug("Profile via unit-cost knapsack")
        return _unit_cost_profile(ss)
    if ss.is_unit_prize:
        logger.debug("Profile via unit-prize knapsack")
        return _unit_prize_profile(ss)
    logger.debug("Profile via attack enumeration")
    return _bruteforce_profile(ss, limits)


def solve_maxp(ss: SecuritySystem, budget: RationalLike,
               limits: SolverLimits = DEFAULT_LIMITS) -> Tuple[Fraction, Attack]:
    """Dispatch to the cheapest exact solver for a single budget"""
    if ss.is_unit_cost:
        return maxp_unitcost_dp(ss, budget)
    try:
        return maxp_integer_dp(ss, budget, limits)
    except BudgetCeilingExceeded:
        logger.info("Falling back to attack enumeration")
        return maxp_bruteforce(ss, budget, limits)


class Dominance(Enum):
    EQUAL = "equal"
    FIRST_LOWER = "first-lower"
    SECOND_LOWER = "second-lower"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DominanceReport:
    """Pointwise comparison of two profiles with the first budget where each one is strictly lower"""
    relation: Dominance
    first_lower_at: Optional[Fraction] = None
    second_lower_at: Optional[Fraction] = None

    @classmethod
    def from_witnesses(cls, first_lower_at: Optional[Fraction],
                       second_lower_at: Optional[Fraction]) -> "DominanceReport":
        if first_lower_at is None and second_lower_at is None:
            relation = Dominance.EQUAL
        elif second_lower_at is None:
            relation = Dominance.FIRST_LOWER
        elif first_lower_at is None:
            relation = Dominance.SECOND_LOWER
        else:
            relation = Dominance.INCOMPARABLE
        return cls(relation, first_lower_at, second_lower_at)


def merged_thresholds(profiles: Sequence[MaxPrizeProfile]) -> List[Fraction]:
    return sorted({t for profile in profiles for t in profile.thresholds})


def profile_leq(first: MaxPrizeProfile, second: MaxPrizeProfile) -> DominanceReport:
    """Compare two profiles on their merged thresholds, which is exhaustive for step functions"""
    first_lower_at = second_lower_at = None
    for budget in merged_thresholds([first, second]):
        a, b = first.evaluate(budget), second.evaluate(budget)
        if a < b and first_lower_at is None:
            first_lower_at = budget
        elif b < a and second_lower_at is None:
            second_lower_at = budget
    return DominanceReport.from_witnesses(first_lower_at, second_lower_at)


def profile_signature(profile: MaxPrizeProfile, thresholds: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(profile.evaluate(t) for t in thresholds)

