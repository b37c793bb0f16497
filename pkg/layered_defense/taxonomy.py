# -*- coding: utf-8 -*-
"""
Tree classification, forbidden-pattern detection and canonical relabeling.

The four classes admitting optimal security systems for every P- and C-model
are rooted paths, rooted stars, rooted 3-caterpillars and rooted 4-spiders.
Trees outside them that branch at the root contain T(2) or T(3).
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from . import catalog
from .core_model import ROOT, RootedTree, validate_tree

logger = logging.getLogger(__name__)


class TreeTag(Enum):
    ROOTED_PATH = "rooted-path"
    ROOTED_STAR = "rooted-star"
    CATERPILLAR = "rooted-3-caterpillar"
    SPIDER = "rooted-4-spider"
    OTHER = "other"


@dataclass(frozen=True)
class TreeClass:
    """
    Classification result

    Args:
        tag: tree class
        relabeling: original vertex index of canonical u_1..u_n (None for "other")
        k: number of level-1 vertices
    """
    tag: TreeTag
    relabeling: Optional[Tuple[int, ...]] = None
    k: Optional[int] = None

    @property
    def is_special(self) -> bool:
        return self.tag is not TreeTag.OTHER

    def describe(self) -> str:
        if self.tag in (TreeTag.CATERPILLAR, TreeTag.SPIDER):
            return f"{self.tag.value} k={self.k}"
        return self.tag.value


def is_rooted_path(tree: RootedTree) -> bool:
    return len(tree.root_children) <= 1 and all(len(kids) <= 1 for kids in tree.children)


def is_rooted_star(tree: RootedTree) -> bool:
    return all(parent == ROOT for parent in tree.parents)


def classify(tree: RootedTree) -> TreeClass:
    """Tag with precedence path > star > 3-caterpillar > 4-spider > other"""
    level1 = list(tree.root_children)
    if is_rooted_path(tree):
        return TreeClass(TreeTag.ROOTED_PATH, tuple(tree.bfs_order()), len(level1))
    if is_rooted_star(tree):
        return TreeClass(TreeTag.ROOTED_STAR, tuple(range(tree.n)), len(level1))
    if tree.depth != 2 or len(level1) < 2:
        return TreeClass(TreeTag.OTHER)

    branching = [v for v in level1 if tree.children[v]]
    if len(branching) == 1:
        hub = branching[0]
        order = [hub] + [v for v in level1 if v != hub] + list(tree.children[hub])
        return TreeClass(TreeTag.CATERPILLAR, tuple(order), len(level1))
    if all(len(tree.children[v]) <= 1 for v in level1):
        leaves = [v for v in level1 if not tree.children[v]]
        order = branching + leaves + [tree.children[v][0] for v in branching]
        return TreeClass(TreeTag.SPIDER, tuple(order), len(level1))
    return TreeClass(TreeTag.OTHER)


def relabel_tree(tree: RootedTree, tree_class: Optional[TreeClass] = None) -> RootedTree:
    """Reorder u_1..u_n into the canonical labeling of the tree's class"""
    tree_class = tree_class or classify(tree)
    if tree_class.relabeling is None:
        return tree
    return tree.reordered(tree_class.relabeling)


PATTERNS = {
    'T2': catalog.t2,
    'T3': catalog.t3,
}


def _pattern_tree(pattern: Union[str, RootedTree]) -> RootedTree:
    if isinstance(pattern, RootedTree):
        return pattern
    return PATTERNS[pattern.upper().replace('(', '').replace(')', '')]()


def contains_rooted_pattern(tree: RootedTree, pattern: Union[str, RootedTree]) -> Optional[Dict[str, str]]:
    """
    Root- and parent-preserving embedding of a pattern tree

    Args:
        tree: host tree
        pattern: "T2", "T3" or any RootedTree

    Returns:
        Mapping from pattern vertex names to host vertex names, or None
    """
    pattern_tree = _pattern_tree(pattern)
    if pattern_tree.n > tree.n or pattern_tree.depth > tree.depth:
        return None
    matcher = DiGraphMatcher(tree.to_networkx(), pattern_tree.to_networkx(),
                             node_match=lambda host, pat: host['is_root'] == pat['is_root'])
    for mapping in matcher.subgraph_monomorphisms_iter():
        embedding = {pat: host for host, pat in mapping.items()}
        logger.debug(f"Pattern embedding found: {embedding}")
        return embedding
    return None


def forbidden_free(tree: RootedTree) -> bool:
    return contains_rooted_pattern(tree, 'T2') is None and contains_rooted_pattern(tree, 'T3') is None


def _canonical_form(graph: nx.Graph, vertex, parent=None) -> str:
    """AHU string of the subtree hanging from vertex"""
    parts = sorted(_canonical_form(graph, child, vertex) for child in graph[vertex] if child != parent)
    return "(" + "".join(parts) + ")"


def _rooted_at(graph: nx.Graph, root) -> RootedTree:
    """Orient a free tree away from root, naming vertices r, u1, u2, ... in breadth-first order"""
    names = {root: catalog.ROOT_NAME}
    edges: List[Tuple[str, str]] = []
    queue = deque([(root, None)])
    while queue:
        vertex, parent = queue.popleft()
        forms = {c: _canonical_form(graph, c, vertex) for c in graph[vertex] if c != parent}
        for child in sorted(forms, key=forms.get, reverse=True):
            names[child] = f"u{len(names)}"
            edges.append((names[vertex], names[child]))
            queue.append((child, vertex))
    return validate_tree(edges, catalog.ROOT_NAME)


def enumerate_rooted_trees(n: int) -> List[RootedTree]:
    """All rooted trees with n non-root vertices, one per isomorphism class"""
    if n == 0:
        return [validate_tree([], catalog.ROOT_NAME)]
    if n == 1:
        return [catalog.rooted_path(1)]
    seen: Dict[str, RootedTree] = {}
    for graph in nx.nonisomorphic_trees(n + 1):
        for root in graph.nodes:
            key = _canonical_form(graph, root)
            if key not in seen:
                seen[key] = _rooted_at(graph, root)
    logger.debug(f"{len(seen)} rooted trees with {n} edges")
    return [seen[key] for key in sorted(seen)]
