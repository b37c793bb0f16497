from fractions import Fraction

import pytest

from layered_defense import catalog
from layered_defense.core_model import (
    ROOT,
    Attack,
    Model,
    SecuritySystem,
    attack_cost,
    attack_prize,
    is_rooted_subtree,
    same_multisets,
    validate_tree,
)
from layered_defense.errors import (
    CycleDetected,
    IndexOutOfRange,
    LengthMismatch,
    MultipleParents,
    NegativeWeight,
    NotARootedSubtree,
    UnknownRoot,
    UnreachableVertex,
)


def test_validate_tree_keeps_input_order():
    tree = validate_tree([("r", "b"), ("b", "a"), ("r", "c")], "r")
    assert tree.vertices == ("b", "a", "c")
    assert tree.parents == (ROOT, 0, ROOT)
    assert tree.root_children == (0, 2)
    assert tree.children == ((1,), (), ())
    assert tree.levels == (1, 2, 1)
    assert tree.depth == 2


def test_validate_tree_root_only():
    tree = validate_tree([], "r")
    assert tree.n == 0
    assert tree.depth == 0
    assert tree.bfs_order() == []


@pytest.mark.parametrize("edges, root, error", [
    ([("r", "r")], "r", CycleDetected),
    ([("r", "a"), ("a", "b"), ("b", "a")], "r", MultipleParents),
    ([("r", "a"), ("b", "c"), ("c", "b")], "r", CycleDetected),
    ([("r", "a"), ("r", "a")], "r", MultipleParents),
    ([("x", "a")], "r", UnknownRoot),
    ([("r", "a"), ("b", "c")], "r", UnreachableVertex),
    ([("r", "a")], "", UnknownRoot),
])
def test_validate_tree_errors(edges, root, error):
    with pytest.raises(error):
        validate_tree(edges, root)


def test_tree_walks():
    tree = catalog.t2()
    assert tree.bfs_order() == [0, 1, 2, 3, 4]
    assert tree.postorder() == [4, 3, 2, 1, 0]
    assert tree.edges[2] == ("u1", "u3")
    assert tree.index("u4") == 3
    with pytest.raises(IndexOutOfRange):
        tree.index("nope")


def test_to_networkx_marks_root():
    graph = catalog.t3().to_networkx()
    assert graph.nodes["r"]["is_root"]
    assert not graph.nodes["u4"]["is_root"]
    assert graph.number_of_edges() == 4


def test_extended_and_reordered():
    tree = catalog.t3()
    bigger = tree.extended([("r", "u5")])
    assert bigger.n == 5
    assert bigger.vertices[:4] == tree.vertices
    flipped = tree.reordered([1, 2, 3, 0])
    assert flipped.vertices == ("u2", "u3", "u4", "u1")
    assert flipped.parents == (ROOT, 0, 1, ROOT)


def test_model_sorts_multisets():
    model = Model(catalog.crossing_tree(), (3, 1, 2), ("1/2", 2, 0))
    assert model.costs == (1, 2, 3)
    assert model.prizes == (0, Fraction(1, 2), 2)
    assert not model.is_p_model


def test_model_flavors():
    tree = catalog.t3()
    assert Model(tree, (1, 1, 1, 1), (0, 0, 1, 1)).is_p_model
    assert Model(tree, (1, 1, 0, 0), (1, 1, 1, 1)).is_c_model


def test_weight_validation():
    tree = catalog.t3()
    with pytest.raises(LengthMismatch):
        SecuritySystem(tree, (1, 1, 1), (1, 1, 1, 1))
    with pytest.raises(NegativeWeight):
        SecuritySystem(tree, (1, 1, 1, -1), (1, 1, 1, 1))


def test_attack_cost_and_prize(crossing_pair):
    ss, _ = crossing_pair
    attack = Attack.from_heads(ss.tree, ["u1", "u3"])
    assert attack_cost(ss, attack) == 4
    assert attack_prize(ss, attack) == 5
    assert attack.heads(ss.tree) == ["u1", "u3"]
    assert attack_prize(ss, Attack()) == 0


def test_attack_must_be_rooted(crossing_pair):
    ss, _ = crossing_pair
    assert is_rooted_subtree(ss.tree, [0, 2])
    assert not is_rooted_subtree(ss.tree, [2])
    with pytest.raises(NotARootedSubtree):
        attack_cost(ss, Attack.of([2]))
    with pytest.raises(IndexOutOfRange):
        is_rooted_subtree(ss.tree, [7])


def test_attack_order():
    attacks = [Attack.of([0, 2]), Attack.of([1]), Attack(), Attack.of([0, 1])]
    ordered = sorted(attacks, key=Attack.sort_key)
    assert ordered == [Attack(), Attack.of([1]), Attack.of([0, 1]), Attack.of([0, 2])]


def test_same_multisets(crossing_pair):
    first, second = crossing_pair
    assert same_multisets(first, second)
    assert not same_multisets(first, first.with_prizes((1, 1, 3)))
    assert first.model() == second.model()
