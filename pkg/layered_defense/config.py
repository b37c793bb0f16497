# -*- coding: utf-8 -*-
"""Solver guard limits shared by the library and the command line."""

from dataclasses import dataclass


@dataclass(frozen=True)
class SolverLimits:
    """
    Size guards for the exhaustive parts of the solver

    Args:
        max_bruteforce_n: largest tree handled by attack enumeration
        max_oracle_n: largest model handled by assignment enumeration
        dp_budget_ceiling: largest scaled integer budget for the knapsack DP
        jobs: worker processes used for oracle profiling
    """
    max_bruteforce_n: int = 20
    max_oracle_n: int = 6
    dp_budget_ceiling: int = 10 ** 6
    jobs: int = 1


DEFAULT_LIMITS = SolverLimits()
