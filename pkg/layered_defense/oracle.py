# -*- coding: utf-8 -*-
"""
Exhaustive ground truth for small models.

Every distinct assignment of the cost and prize multisets is profiled; an
optimal security system exists iff some assignment's profile equals the
pointwise lower envelope at every merged threshold.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement, permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .attack_solver import MaxPrizeProfile, maxp_profile, merged_thresholds, profile_signature
from .config import DEFAULT_LIMITS, SolverLimits
from .core_model import ONE, ZERO, Model, RootedTree, SecuritySystem
from .errors import TooLarge
from .strategy import satisfies_order_conditions
from .taxonomy import contains_rooted_pattern
from .transform import default_pad_cost

logger = logging.getLogger(__name__)

# Assignments on the two forbidden trees that lack optimal security systems
T2_PRIZES = (0, 1, 3, 2, 2)
T3_PRIZES = (0, 0, 1, 1)
T2_COSTS = (3, 2, 0, 1, 1)
T3_COSTS = (1, 1, 0, 0)


class Status(Enum):
    OPTIMAL_EXISTS = "optimal-exists"
    NO_OPTIMAL = "no-optimal"
    INCONCLUSIVE_GUARD = "inconclusive-guard"


@dataclass(frozen=True)
class CounterPair:
    """maxp(first_budget) is lower under first; maxp(second_budget) is lower under second"""
    first: SecuritySystem
    second: SecuritySystem
    first_budget: Fraction
    second_budget: Fraction


@dataclass(frozen=True)
class OptimalityVerdict:
    status: Status
    witness: Optional[SecuritySystem] = None
    counter_pair: Optional[CounterPair] = None
    envelope: Optional[MaxPrizeProfile] = None


def _guard(model: Model, limits: SolverLimits):
    if model.tree.n > limits.max_oracle_n:
        logger.warning(f"Model has {model.tree.n} vertices; oracle guard is {limits.max_oracle_n}")
        raise TooLarge(f"Model has {model.tree.n} non-root vertices; the oracle is limited to "
                       f"{limits.max_oracle_n} (raise --max-n to override)")


def distinct_permutations(values: Sequence[Fraction]) -> List[Tuple[Fraction, ...]]:
    """Distinct arrangements of a multiset in lexicographic order"""
    return sorted(set(permutations(values)))


def enumerate_assignments(model: Model, limits: SolverLimits = DEFAULT_LIMITS) -> Iterator[SecuritySystem]:
    _guard(model, limits)
    prize_orders = distinct_permutations(model.prizes)
    for cost in distinct_permutations(model.costs):
        for prize in prize_orders:
            yield SecuritySystem(model.tree, cost, prize)


def _profile(ss: SecuritySystem, limits: SolverLimits) -> MaxPrizeProfile:
    return maxp_profile(ss, limits)


def _profiles(assignments: List[SecuritySystem], limits: SolverLimits) -> List[MaxPrizeProfile]:
    worker = partial(_profile, limits=limits)
    if limits.jobs > 1 and len(assignments) > 1:
        logger.info(f"Profiling {len(assignments)} assignments on {limits.jobs} workers")
        chunk = max(1, len(assignments) // (4 * limits.jobs))
        with ProcessPoolExecutor(max_workers=limits.jobs) as executor:
            return list(executor.map(worker, assignments, chunksize=chunk))
    return [worker(ss) for ss in assignments]


def _envelope(profiles: List[MaxPrizeProfile]) -> Tuple[List[Fraction], Tuple[Fraction, ...]]:
    thresholds = merged_thresholds(profiles)
    lowest = tuple(min(p.evaluate(t) for p in profiles) for t in thresholds)
    return thresholds, lowest


def lower_envelope(model: Model, limits: SolverLimits = DEFAULT_LIMITS) -> MaxPrizeProfile:
    """Pointwise minimum of maxp over all assignments"""
    profiles = _profiles(list(enumerate_assignments(model, limits)), limits)
    thresholds, lowest = _envelope(profiles)
    return MaxPrizeProfile.from_points(list(zip(thresholds, lowest)))


def _crossing(first: Tuple[Fraction, ...], second: Tuple[Fraction, ...],
              thresholds: List[Fraction]) -> Optional[Tuple[Fraction, Fraction]]:
    first_lower = next((t for t, a, b in zip(thresholds, first, second) if a < b), None)
    second_lower = next((t for t, a, b in zip(thresholds, first, second) if b < a), None)
    if first_lower is None or second_lower is None:
        return None
    return first_lower, second_lower


def find_optimal_ss(model: Model, prune: bool = True, limits: SolverLimits = DEFAULT_LIMITS,
                    strict: bool = True) -> OptimalityVerdict:
    """
    Decide whether the model has a security system optimal at every budget

    Args:
        model: cyber-security model
        prune: skip assignments that a single prize or cost swap weakly improves
        limits: size guard and worker count
        strict: raise TooLarge above the guard instead of returning an inconclusive verdict

    Returns:
        OptimalityVerdict with a witness or a crossing counter-pair
    """
    try:
        assignments = list(enumerate_assignments(model, limits))
    except TooLarge:
        if strict:
            raise
        return OptimalityVerdict(Status.INCONCLUSIVE_GUARD)

    total = len(assignments)
    if prune:
        assignments = [ss for ss in assignments if satisfies_order_conditions(ss)]
    logger.info(f"Profiling {len(assignments)} of {total} assignments")

    profiles = _profiles(assignments, limits)
    thresholds, lowest = _envelope(profiles)
    envelope = MaxPrizeProfile.from_points(list(zip(thresholds, lowest)))

    signatures: Dict[Tuple[Fraction, ...], int] = {}
    for position, profile in enumerate(profiles):
        signatures.setdefault(profile_signature(profile, thresholds), position)

    if lowest in signatures:
        witness = assignments[signatures[lowest]]
        logger.info("Optimal security system found")
        return OptimalityVerdict(Status.OPTIMAL_EXISTS, witness=witness, envelope=envelope)

    distinct = list(signatures.items())
    for i, (first, first_pos) in enumerate(distinct):
        for second, second_pos in distinct[i + 1:]:
            crossing = _crossing(first, second, thresholds)
            if crossing:
                pair = CounterPair(assignments[first_pos], assignments[second_pos], *crossing)
                logger.info("No optimal security system exists")
                return OptimalityVerdict(Status.NO_OPTIMAL, counter_pair=pair, envelope=envelope)
    raise AssertionError("Distinct profiles without a crossing pair must include the envelope")


def _padded(values: Sequence[int], extra: int, pad: Fraction) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values) + tuple([pad] * extra)


def witness_model(tree: RootedTree, flavor: str = 'P') -> Optional[Tuple[Model, str]]:
    """
    Padded T(2)/T(3) model on a tree containing either pattern

    The P flavor places {0,1,2,2,3} (T(2)) or {0,0,1,1} (T(3)) on the pattern
    and zero prizes elsewhere; the C flavor places {0,1,1,2,3} or {0,0,1,1}
    on the pattern edges and the pad cost elsewhere.

    Returns:
        (model, flavor) with flavor normalized to 'P' or 'C', or None when
        the tree contains neither pattern
    """
    flavor = flavor.upper()
    for pattern, prizes, costs in (('T2', T2_PRIZES, T2_COSTS), ('T3', T3_PRIZES, T3_COSTS)):
        if contains_rooted_pattern(tree, pattern) is None:
            continue
        extra = tree.n - len(prizes)
        if flavor == 'P':
            return Model(tree, tuple([ONE] * tree.n), _padded(prizes, extra, ZERO)), flavor
        pad = default_pad_cost(tree)
        return Model(tree, _padded(costs, extra, pad), tuple([ONE] * tree.n)), flavor
    return None


def find_witness_model(tree: RootedTree, flavor: str = 'P', max_value: int = 3,
                       limits: SolverLimits = DEFAULT_LIMITS) -> Optional[Tuple[Model, OptimalityVerdict]]:
    """
    A verified model without an optimal security system

    Tries witness_model first, then every multiset of small integer values
    for the varying weight until the oracle reports no optimum.
    Raises TooLarge when the tree exceeds limits.max_oracle_n.
    """
    found = witness_model(tree, flavor)
    if found is None:
        return None
    padded, flavor = found
    verdict = find_optimal_ss(padded, limits=limits)
    if verdict.status is Status.NO_OPTIMAL:
        return padded, verdict
    logger.info("Padded witness has an optimum; searching small multisets")
    unit = tuple([ONE] * tree.n)
    for values in combinations_with_replacement(range(max_value + 1), tree.n):
        weights = tuple(Fraction(v) for v in values)
        model = Model(tree, unit, weights) if flavor == 'P' else Model(tree, weights, unit)
        verdict = find_optimal_ss(model, limits=limits)
        if verdict.status is Status.NO_OPTIMAL:
            return model, verdict
    return None
