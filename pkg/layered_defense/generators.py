# -*- coding: utf-8 -*-
"""Random trees, multisets and security systems for property checks and surveys."""

from fractions import Fraction
from typing import List, Sequence, Tuple

import networkx as nx
import numpy as np

from . import catalog
from .core_model import ONE, Model, RootedTree, SecuritySystem, validate_tree


def random_tree(n: int, rng: np.random.Generator) -> RootedTree:
    """Uniform labeled tree on n+1 vertices from a Prüfer sequence, rooted at vertex 0"""
    if n <= 1:
        return catalog.rooted_path(n)
    sequence = [int(v) for v in rng.integers(0, n + 1, size=n - 1)]
    graph = nx.from_prufer_sequence(sequence)
    names = {0: catalog.ROOT_NAME}
    edges: List[Tuple[str, str]] = []
    for tail, head in nx.bfs_edges(graph, 0):
        names[head] = f"u{len(names)}"
        edges.append((names[tail], names[head]))
    return validate_tree(edges, catalog.ROOT_NAME)


def random_branching_tree(n: int, rng: np.random.Generator) -> RootedTree:
    """Random tree whose root has at least two children (n >= 2)"""
    while True:
        tree = random_tree(n, rng)
        if len(tree.root_children) >= 2:
            return tree


def random_caterpillar(n: int, rng: np.random.Generator) -> RootedTree:
    """Rooted 3-caterpillar with n >= 3 non-root vertices"""
    k = int(rng.integers(2, n))
    return catalog.caterpillar(k, n)


def random_spider(n: int, rng: np.random.Generator) -> RootedTree:
    """Rooted 4-spider with n >= 4 non-root vertices"""
    k = int(rng.integers((n + 1) // 2, n - 1))
    return catalog.spider(k, n)


def random_values(n: int, rng: np.random.Generator, high: int = 9,
                  denominators: Sequence[int] = (1,)) -> Tuple[Fraction, ...]:
    """n nonnegative rationals with numerators in 0..high over the given denominators"""
    numerators = rng.integers(0, high + 1, size=n)
    chosen = rng.choice(list(denominators), size=n)
    return tuple(Fraction(int(a), int(b)) for a, b in zip(numerators, chosen))


def random_scaled_prizes(n: int, rng: np.random.Generator, denominator: int = 6) -> Tuple[Fraction, ...]:
    """n prizes in [0, 1] with the given denominator"""
    return tuple(Fraction(int(v), denominator) for v in rng.integers(0, denominator + 1, size=n))


def random_model(tree: RootedTree, rng: np.random.Generator, high: int = 9) -> Model:
    return Model(tree, random_values(tree.n, rng, high), random_values(tree.n, rng, high))


def random_p_model(tree: RootedTree, rng: np.random.Generator, high: int = 9) -> Model:
    return Model(tree, tuple([ONE] * tree.n), random_values(tree.n, rng, high))


def random_c_model(tree: RootedTree, rng: np.random.Generator, high: int = 9) -> Model:
    return Model(tree, random_values(tree.n, rng, high), tuple([ONE] * tree.n))


def random_security_system(tree: RootedTree, rng: np.random.Generator, high: int = 9,
                           denominators: Sequence[int] = (1,)) -> SecuritySystem:
    return SecuritySystem(tree,
                          random_values(tree.n, rng, high, denominators),
                          random_values(tree.n, rng, high))


def random_budget(ss: SecuritySystem, rng: np.random.Generator, denominator: int = 4) -> Fraction:
    """Budget between 0 and the total cost, on a grid of 1/denominator"""
    total = sum(ss.cost, Fraction(0))
    steps = int(total * denominator) + 1
    return Fraction(int(rng.integers(0, steps + 1)), denominator)
