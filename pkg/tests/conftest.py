import json
import random

import pytest

from treehue.hierarchy import Hierarchy, TreeNode, parse_nested_json

# Imbalanced wheel tree: three depth-1 sub-trees with 1, 2 and 3 leaves.
WHEEL_TREE = {
    "name": "root",
    "children": [
        {"name": "a", "children": [{"name": "a1"}]},
        {"name": "b", "children": [{"name": "b1"}, {"name": "b2"}]},
        {"name": "c", "children": [{"name": "c1"}, {"name": "c2"}, {"name": "c3"}]},
    ],
}

# Imbalanced depth-3 tree: one 2-leaf branch, one depth-3 chain, one bare leaf.
IMBALANCED_TREE = {
    "name": "root",
    "children": [
        {"name": "a", "children": [{"name": "a1"}, {"name": "a2"}]},
        {"name": "b", "children": [{"name": "b1", "children": [{"name": "b2"}]}]},
        {"name": "c"},
    ],
}


@pytest.fixture
def wheel_tree() -> Hierarchy:
    return parse_nested_json(json.dumps(WHEEL_TREE))


@pytest.fixture
def imbalanced_tree() -> Hierarchy:
    return parse_nested_json(json.dumps(IMBALANCED_TREE))


def balanced_tree(branching: int, depth: int) -> Hierarchy:
    def build(name: str, d: int) -> TreeNode:
        node = TreeNode(id=-1, name=name)
        if d < depth:
            node.children = [build(f"{name}{i}", d + 1) for i in range(branching)]
        return node

    return Hierarchy(build("n", 0))


def random_tree(rng: random.Random, max_depth: int = 6, max_nodes: int = 200) -> Hierarchy:
    """Seeded random hierarchy within the given depth/size bounds."""
    count = 0

    def build(name: str, depth: int) -> TreeNode:
        nonlocal count
        count += 1
        node = TreeNode(id=-1, name=name)
        if depth < max_depth and count < max_nodes:
            n_children = rng.randint(0, 4) if depth > 0 else rng.randint(1, 4)
            for i in range(n_children):
                if count >= max_nodes:
                    break
                node.children.append(build(f"{name}.{i}", depth + 1))
        return node

    return Hierarchy(build("r", 0))
