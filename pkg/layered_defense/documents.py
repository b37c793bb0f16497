# -*- coding: utf-8 -*-
"""
JSON documents for trees, models and security systems.

    {"root": "r", "edges": [["r", "u1"], ...],
     "costs": {"u1": 3, ...}, "prizes": {"u1": "1/2", ...}}

A document with "costs" and "prizes" is a security system; one with
"cost_multiset" and "prize_multiset" is a model; otherwise it is a tree.
"""

import json
import logging
import sys
from typing import Any, Dict, List, Mapping, Union

from .core_model import Model, RootedTree, SecuritySystem, validate_tree
from .errors import DocumentError, InputError
from .rational import parse_nonnegative, to_json_value

logger = logging.getLogger(__name__)

Document = Union[RootedTree, Model, SecuritySystem]


def load_json(path: str) -> Dict[str, Any]:
    try:
        if path == '-':
            data = json.load(sys.stdin)
        else:
            with open(path, 'r', encoding='utf-8') as handle:
                data = json.load(handle)
    except FileNotFoundError:
        raise DocumentError(f"File not found: {path}") from None
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON ({e})") from None
    if not isinstance(data, dict):
        raise DocumentError(f"{path}: top-level value must be an object")
    return data


def _require(data: Mapping[str, Any], key: str) -> Any:
    if key not in data:
        raise DocumentError(f"Missing key {key!r}")
    return data[key]


def parse_tree(data: Mapping[str, Any]) -> RootedTree:
    root = _require(data, 'root')
    if not isinstance(root, str):
        raise DocumentError("Key 'root' must be a string")
    edges = _require(data, 'edges')
    if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e) for e in edges):
        raise DocumentError("Key 'edges' must be a list of [parent, child] string pairs")
    return validate_tree([tuple(e) for e in edges], root)


def _vector(tree: RootedTree, data: Mapping[str, Any], key: str) -> List:
    table = data[key]
    if not isinstance(table, dict):
        raise DocumentError(f"Key {key!r} must be an object keyed by head-vertex name")
    unknown = sorted(set(table) - set(tree.vertices))
    if unknown:
        raise DocumentError(f"Key {key!r} names unknown vertex {unknown[0]!r}")
    missing = [name for name in tree.vertices if name not in table]
    if missing:
        raise DocumentError(f"Key {key!r} has no entry for vertex {missing[0]!r}")
    return [_number(table[name], f"{key}.{name}") for name in tree.vertices]


def _number(value: Any, where: str):
    try:
        return parse_nonnegative(value, where)
    except InputError as e:
        raise DocumentError(f"Key {where!r}: {e}") from None


def _multiset(data: Mapping[str, Any], key: str) -> List:
    values = data[key]
    if not isinstance(values, list):
        raise DocumentError(f"Key {key!r} must be an array")
    return [_number(v, f"{key}[{i}]") for i, v in enumerate(values)]


def parse_document(data: Mapping[str, Any]) -> Document:
    tree = parse_tree(data)
    if 'costs' in data or 'prizes' in data:
        cost = _vector(tree, data, 'costs') if 'costs' in data else None
        prize = _vector(tree, data, 'prizes') if 'prizes' in data else None
        if cost is None or prize is None:
            raise DocumentError(f"Key {'costs' if cost is None else 'prizes'!r} is required with its partner")
        return SecuritySystem(tree, tuple(cost), tuple(prize))
    if 'cost_multiset' in data or 'prize_multiset' in data:
        costs = _multiset(data, 'cost_multiset') if 'cost_multiset' in data else None
        prizes = _multiset(data, 'prize_multiset') if 'prize_multiset' in data else None
        if costs is None or prizes is None:
            raise DocumentError(
                f"Key {'cost_multiset' if costs is None else 'prize_multiset'!r} is required with its partner")
        for key, values in (('cost_multiset', costs), ('prize_multiset', prizes)):
            if len(values) != tree.n:
                raise DocumentError(f"Key {key!r} has {len(values)} entries for {tree.n} edges")
        return Model(tree, tuple(costs), tuple(prizes))
    return tree


def load_document(path: str) -> Document:
    return parse_document(load_json(path))


def load_security_system(path: str) -> SecuritySystem:
    document = load_document(path)
    if not isinstance(document, SecuritySystem):
        raise DocumentError(f"{path}: expected 'costs' and 'prizes' for a security system")
    return document


def load_model(path: str) -> Model:
    """Model document, or the model underlying a security-system document"""
    document = load_document(path)
    if isinstance(document, SecuritySystem):
        return document.model()
    if not isinstance(document, Model):
        raise DocumentError(f"{path}: expected 'cost_multiset' and 'prize_multiset' for a model")
    return document


def load_tree(path: str) -> RootedTree:
    document = load_document(path)
    return document if isinstance(document, RootedTree) else document.tree


def to_document(value: Document) -> Dict[str, Any]:
    tree = value if isinstance(value, RootedTree) else value.tree
    data: Dict[str, Any] = {'root': tree.root, 'edges': [list(e) for e in tree.edges]}
    if isinstance(value, SecuritySystem):
        data['costs'] = {v: to_json_value(c) for v, c in zip(tree.vertices, value.cost)}
        data['prizes'] = {v: to_json_value(p) for v, p in zip(tree.vertices, value.prize)}
    elif isinstance(value, Model):
        data['cost_multiset'] = [to_json_value(c) for c in value.costs]
        data['prize_multiset'] = [to_json_value(p) for p in value.prizes]
    return data


def dumps(data: Mapping[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def write_json(data: Mapping[str, Any], path: str = '-'):
    text = dumps(data)
    if path == '-':
        print(text)
        return
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text + "\n")
    logger.info(f"Wrote {path}")
