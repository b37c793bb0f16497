import json
import logging

import numpy as np
import pytest

from layered_defense import catalog
from layered_defense.core_model import SecuritySystem
from layered_defense.documents import to_document


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def crossing_pair():
    """The two candidate systems on the three-edge tree with C = P = {1, 2, 3}"""
    tree = catalog.crossing_tree()
    return (SecuritySystem(tree, (3, 2, 1), (2, 1, 3)),
            SecuritySystem(tree, (2, 3, 1), (1, 2, 3)))


@pytest.fixture
def write_document(tmp_path):
    def write(value, name='doc.json'):
        path = tmp_path / name
        data = value if isinstance(value, dict) else to_document(value)
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)
    return write


@pytest.fixture
def reset_logging():
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) in (logging.StreamHandler, logging.FileHandler):
            root.removeHandler(handler)
            handler.close()
