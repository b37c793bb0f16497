# -*- coding: utf-8 -*-
"""
Classification survey over all small rooted trees.

For every rooted tree in a size range: its class, whether it contains T(2)
or T(3), and the oracle verdict for a verified witness model (the padded
T(2)/T(3) model, or a small-multiset model found by search).
"""

import logging
from typing import Dict, List

import pandas as pd

from .config import DEFAULT_LIMITS, SolverLimits
from .core_model import RootedTree
from .errors import TooLarge
from .oracle import Status, find_witness_model
from .taxonomy import classify, contains_rooted_pattern, enumerate_rooted_trees

logger = logging.getLogger(__name__)

NO_WITNESS_FOUND = 'no-witness-found'


def _edge_text(tree: RootedTree) -> str:
    return ' '.join(f"{tail}>{head}" for tail, head in tree.edges)


def _witness_verdict(tree: RootedTree, flavor: str, limits: SolverLimits) -> str:
    try:
        found = find_witness_model(tree, flavor, limits=limits)
    except TooLarge:
        return Status.INCONCLUSIVE_GUARD.value
    if found is None:
        logger.warning(f"No model without an optimum found on {_edge_text(tree)}")
        return NO_WITNESS_FOUND
    return found[1].status.value


def survey_tree(tree: RootedTree, flavor: str = 'P', limits: SolverLimits = DEFAULT_LIMITS) -> Dict:
    tree_class = classify(tree)
    has_t2 = contains_rooted_pattern(tree, 'T2') is not None
    has_t3 = contains_rooted_pattern(tree, 'T3') is not None
    verdict = ''
    if has_t2 or has_t3:
        verdict = _witness_verdict(tree, flavor, limits)
    return {
        'n': tree.n,
        'edges': _edge_text(tree),
        'root_degree': len(tree.root_children),
        'tag': tree_class.tag.value,
        'k': tree_class.k,
        'contains_T2': has_t2,
        'contains_T3': has_t3,
        'forbidden_free': not (has_t2 or has_t3),
        'witness_verdict': verdict,
    }


def survey(n_min: int, n_max: int, flavor: str = 'P', limits: SolverLimits = DEFAULT_LIMITS) -> pd.DataFrame:
    """
    Survey every rooted tree with n_min..n_max non-root vertices

    Args:
        n_min: smallest tree size
        n_max: largest tree size
        flavor: 'P' or 'C' witness models
        limits: oracle guard; larger trees get an inconclusive verdict

    Returns:
        DataFrame with one row per tree
    """
    rows: List[Dict] = []
    for n in range(n_min, n_max + 1):
        trees = enumerate_rooted_trees(n)
        logger.info(f"Surveying {len(trees)} rooted trees with {n} edges")
        rows.extend(survey_tree(tree, flavor, limits) for tree in trees)
    df = pd.DataFrame(rows)
    if not df.empty:
        consistent = (df['tag'] != 'other') == df['forbidden_free']
        df['consistent'] = consistent.astype(object).where(df['root_degree'] >= 2, None)
    return df


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    """Tree counts per size and class"""
    if df.empty:
        return df
    return df.groupby(['n', 'tag']).size().unstack(fill_value=0)
