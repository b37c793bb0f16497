from fractions import Fraction

import pytest

from layered_defense import catalog
from layered_defense.attack_solver import maxp_bruteforce, maxp_profile, solve_maxp
from layered_defense.core_model import ROOT, Attack, Model, SecuritySystem, attack_cost, attack_prize
from layered_defense.errors import NonIntegerCost, NonIntegerPrize, NotARootedSubtreeOfSupertree, ZeroCost
from layered_defense.generators import random_budget, random_tree
from layered_defense.transform import (
    contract_zero_cost_edges,
    default_pad_cost,
    lift_to_supertree,
    pad_infinite_costs,
    pad_zero_prizes,
    scale_costs_to_integers,
    scale_prizes_to_integers,
    to_cmodel,
    to_pmodel,
)


def test_to_pmodel_subdivides(crossing_pair):
    ss, _ = crossing_pair
    result = to_pmodel(ss)
    assert result.ss.is_unit_cost
    assert result.ss.tree.n == 6
    assert result.correspondence() == {"u1": ["u1~1", "u1~2", "u1"], "u2": ["u2~1", "u2"], "u3": ["u3"]}
    for budget in range(8):
        assert solve_maxp(result.ss, budget)[0] == maxp_bruteforce(ss, budget)[0]


def test_to_pmodel_attack_correspondence(crossing_pair):
    ss, _ = crossing_pair
    result = to_pmodel(ss)
    attack = Attack.from_heads(ss.tree, ["u1", "u3"])
    lifted = result.lift(attack)
    assert attack_cost(result.ss, lifted) == attack_cost(ss, attack)
    assert attack_prize(result.ss, lifted) == attack_prize(ss, attack)
    assert result.project(lifted) == attack


def test_to_pmodel_preconditions():
    tree = catalog.rooted_path(2)
    with pytest.raises(NonIntegerCost):
        to_pmodel(SecuritySystem(tree, ("1/2", 1), (1, 1)))
    with pytest.raises(ZeroCost):
        to_pmodel(SecuritySystem(tree, (0, 1), (1, 1)))


def test_to_cmodel_expands(crossing_pair):
    ss, _ = crossing_pair
    result = to_cmodel(ss)
    assert result.ss.is_unit_prize
    assert result.ss.tree.n == 6
    assert result.correspondence()["u3"] == ["u3", "u3~1", "u3~2"]
    assert maxp_profile(result.ss).points == maxp_profile(ss).points


def test_to_cmodel_zero_prize_stays_structural():
    ss = SecuritySystem(catalog.rooted_path(2), (1, 1), (0, 2))
    result = to_cmodel(ss)
    assert result.ss.prize == (0, 1, 1)
    assert maxp_profile(result.ss).points == maxp_profile(ss).points
    with pytest.raises(NonIntegerPrize):
        to_cmodel(ss.with_prizes((Fraction(1, 2), 1)))


def test_fresh_names_avoid_collisions():
    tree = catalog.rooted_path(1).extended([("r", "u1~1")])
    result = to_pmodel(SecuritySystem(tree, (2, 1), (1, 1)))
    assert len(set(result.ss.tree.vertices)) == result.ss.tree.n == 3


@pytest.mark.slow
def test_transforms_preserve_profiles(rng):
    for _ in range(50):
        tree = random_tree(int(rng.integers(1, 6)), rng)
        costs = tuple(int(v) for v in rng.integers(1, 5, size=tree.n))
        prizes = tuple(int(v) for v in rng.integers(0, 5, size=tree.n))
        ss = SecuritySystem(tree, costs, prizes)
        profile = maxp_profile(ss)
        budgets = list(profile.thresholds) + [random_budget(ss, rng) for _ in range(10)]
        subdivided = to_pmodel(ss).ss
        expanded = to_cmodel(ss).ss
        for budget in budgets:
            assert solve_maxp(subdivided, budget)[0] == profile.evaluate(budget)
            assert solve_maxp(expanded, budget)[0] == profile.evaluate(budget)


def test_contract_zero_cost_edges():
    tree = catalog.t3()
    contraction = contract_zero_cost_edges(SecuritySystem(tree, (0, 1, 1, 0), (1, 1, 1, 1)))
    assert contraction.free_prize == 1
    assert contraction.vertex_map == (ROOT, 0, 1, 1)
    assert contraction.ss.tree.vertices == ("u2", "u3")
    assert contraction.ss.prize == (1, 2)
    assert contraction.ss.cost == (1, 1)


def test_contraction_shifts_profile(rng):
    for _ in range(30):
        tree = random_tree(int(rng.integers(1, 7)), rng)
        ss = SecuritySystem(tree, tuple(int(v) for v in rng.integers(0, 3, size=tree.n)),
                            tuple(int(v) for v in rng.integers(0, 5, size=tree.n)))
        contraction = contract_zero_cost_edges(ss)
        for budget in range(int(sum(ss.cost)) + 1):
            expected = maxp_bruteforce(ss, budget)[0]
            assert contraction.free_prize + maxp_bruteforce(contraction.ss, budget)[0] == expected


def test_scaling():
    ss = SecuritySystem(catalog.rooted_star(3), ("1/2", "1/3", 1), ("3/4", "1/2", 0))
    scaled, factor = scale_costs_to_integers(ss)
    assert factor == 6
    assert scaled.cost == (3, 2, 6)
    scaled, factor = scale_prizes_to_integers(ss)
    assert factor == 4
    assert scaled.prize == (3, 2, 0)


def test_pad_zero_prizes():
    model = Model(catalog.t3(), (1, 1, 1, 1), (0, 0, 1, 1))
    supertree = catalog.t3().extended([("r", "u5")])
    padded = pad_zero_prizes(model, supertree)
    assert padded.prizes == (0, 0, 0, 1, 1)
    assert padded.is_p_model


def test_pad_infinite_costs():
    model = Model(catalog.t3(), (1, 1, 0, 0), (1, 1, 1, 1))
    supertree = catalog.t3().extended([("u4", "u5"), ("r", "u6")])
    assert default_pad_cost(catalog.t3()) == 5
    padded = pad_infinite_costs(model, supertree)
    assert padded.costs == (0, 0, 1, 1, 5, 5)
    assert pad_infinite_costs(model, supertree, pad_cost=9).costs[-1] == 9


def test_lifted_profiles():
    base = SecuritySystem(catalog.t2(), (1, 1, 1, 1, 1), (0, 1, 3, 2, 2))
    supertree = catalog.t2().extended([("u3", "u6"), ("r", "u7")])
    lifted = lift_to_supertree(base, supertree)
    assert maxp_profile(lifted).points == maxp_profile(base).points

    c_base = SecuritySystem(catalog.t2(), (3, 2, 0, 1, 1), (1, 1, 1, 1, 1))
    pad = default_pad_cost(c_base.tree)
    c_lifted = lift_to_supertree(c_base, supertree, new_cost=pad, new_prize=1)
    base_profile, lifted_profile = maxp_profile(c_base), maxp_profile(c_lifted)
    for budget in range(int(pad)):
        assert lifted_profile.evaluate(budget) == base_profile.evaluate(budget)


def test_embedding_must_preserve_parents():
    ss = SecuritySystem(catalog.t2(), (1, 1, 1, 1, 1), (0, 1, 3, 2, 2))
    with pytest.raises(NotARootedSubtreeOfSupertree):
        lift_to_supertree(ss, catalog.t3().extended([("r", "u5")]))
    renamed = catalog.t2().extended([]).reordered([1, 0, 2, 3, 4])
    lifted = lift_to_supertree(ss, renamed)
    assert lifted.prize[renamed.index("u3")] == 3
