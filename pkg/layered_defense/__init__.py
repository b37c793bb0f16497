# -*- coding: utf-8 -*-
"""
Layered-security solvers on rooted trees.

Optimal attacks under a budget, good and optimal security systems, P/C
model transforms and duality, tree classification and an exhaustive oracle.
"""

from .attack_solver import MaxPrizeProfile, maxp_bruteforce, maxp_profile, profile_leq, solve_maxp
from .config import DEFAULT_LIMITS, SolverLimits
from .core_model import Attack, Model, RootedTree, SecuritySystem, validate_tree
from .errors import LayeredDefenseError
from .oracle import find_optimal_ss
from .strategy import good_ss, optimal_ss
from .taxonomy import classify, forbidden_free

__version__ = "0.1.0"

__all__ = [
    'Attack', 'DEFAULT_LIMITS', 'LayeredDefenseError', 'MaxPrizeProfile', 'Model', 'RootedTree',
    'SecuritySystem', 'SolverLimits', 'classify', 'find_optimal_ss', 'forbidden_free', 'good_ss',
    'maxp_bruteforce', 'maxp_profile', 'optimal_ss', 'profile_leq', 'solve_maxp', 'validate_tree',
]
