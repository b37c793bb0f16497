# -*- coding: utf-8 -*-
"""
Named rooted trees used throughout the solver and its tests.

All trees use the root name "r" and non-root names "u1".."un", listed so
that u_i is the head of e_i.
"""

from typing import List, Tuple

from .core_model import RootedTree, validate_tree
from .errors import WrongTreeClass

ROOT_NAME = "r"


def _u(i: int) -> str:
    return f"u{i}"


def _build(parents: List[int]) -> RootedTree:
    """parents[i-1] is the 1-based parent of u_i, 0 for the root"""
    edges: List[Tuple[str, str]] = []
    for i, parent in enumerate(parents, start=1):
        edges.append((ROOT_NAME if parent == 0 else _u(parent), _u(i)))
    return validate_tree(edges, ROOT_NAME)


def t2() -> RootedTree:
    """Two level-1 vertices, one with a single child and one with two children"""
    return _build([0, 0, 1, 2, 2])


def t3() -> RootedTree:
    """A root leaf next to a rooted chain of three edges"""
    return _build([0, 0, 2, 3])


def tp(length: int) -> RootedTree:
    """Path with 2*length edges rooted at its center; u_i hangs below u_{i-2}"""
    if length < 1:
        raise WrongTreeClass(f"T_p needs length >= 1, got {length}")
    return _build([0 if i <= 2 else i - 2 for i in range(1, 2 * length + 1)])


def crossing_tree() -> RootedTree:
    """The three-edge tree r->u1, r->u2, u1->u3"""
    return _build([0, 0, 1])


def rooted_path(n: int) -> RootedTree:
    return _build([i - 1 for i in range(1, n + 1)])


def rooted_star(n: int) -> RootedTree:
    return _build([0] * n)


def caterpillar(k: int, n: int) -> RootedTree:
    """u_1..u_k on level 1, u_{k+1}..u_n children of u_1"""
    if not 2 <= k <= n - 1:
        raise WrongTreeClass(f"A rooted 3-caterpillar needs 2 <= k <= n-1, got k={k}, n={n}")
    return _build([0] * k + [1] * (n - k))


def spider(k: int, n: int) -> RootedTree:
    """u_1..u_k on level 1, u_{k+i} the only child of u_i"""
    if not (2 * k >= n and k <= n - 2):
        raise WrongTreeClass(f"A rooted 4-spider needs n/2 <= k <= n-2, got k={k}, n={n}")
    return _build([0] * k + list(range(1, n - k + 1)))
