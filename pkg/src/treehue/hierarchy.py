"""Rooted ordered tree model with JSON and path-per-line ingestion.

Hierarchies are immutable after construction. Nodes are addressed by their
slash-joined name path from the root, which is why sibling names must be
unique.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

MAX_NODES = 100_000
MAX_DEPTH = 64


class ParseError(ValueError):
    """Malformed tree document."""


class SizeLimitError(ValueError):
    """Hierarchy exceeds the supported node count or depth."""


@dataclass(eq=False)
class TreeNode:
    id: int
    name: str
    parent: Optional["TreeNode"] = None
    children: list["TreeNode"] = field(default_factory=list)
    depth: int = 0
    height: int = 0
    leaf_count: int = 1

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def path(self) -> str:
        parts = []
        node: Optional[TreeNode] = self
        while node is not None:
            parts.append(node.name)
            node = node.parent
        return "/".join(reversed(parts))

    def __repr__(self):
        return f"TreeNode({self.path!r})"


class Hierarchy:
    """Rooted ordered tree; derives depth, height and leaf counts on build."""

    def __init__(self, root: TreeNode):
        self.root = root
        self.path_index: dict[str, TreeNode] = {}
        self.max_depth = 0
        self._finalize()

    def _finalize(self):
        # iterative pre-order pass: depths, ids, path index, limits
        self.root.parent = None
        self.root.depth = 0
        order: list[TreeNode] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            order.append(node)
            if len(order) > MAX_NODES:
                raise SizeLimitError(f"hierarchy exceeds {MAX_NODES} nodes")
            names = set()
            for child in node.children:
                if child.name in names:
                    raise ParseError(
                        f"duplicate sibling name {child.name!r} under {node.path!r}"
                    )
                names.add(child.name)
                child.parent = node
                child.depth = node.depth + 1
                if child.depth > MAX_DEPTH:
                    raise SizeLimitError(f"hierarchy exceeds depth {MAX_DEPTH}")
            stack.extend(reversed(node.children))
        for node in order:
            self.path_index[node.path] = node
            self.max_depth = max(self.max_depth, node.depth)
        for i, node in enumerate(order):
            node.id = i
        # post-order pass: heights and leaf counts
        for node in reversed(order):
            if node.children:
                node.height = 1 + max(c.height for c in node.children)
                node.leaf_count = sum(c.leaf_count for c in node.children)
            else:
                node.height = 0
                node.leaf_count = 1
        self._preorder = order

    def __len__(self) -> int:
        return len(self._preorder)

    def __iter__(self) -> Iterator[TreeNode]:
        return iter(self._preorder)

    @property
    def nodes(self) -> list[TreeNode]:
        return list(self._preorder)

    @property
    def leaves(self) -> list[TreeNode]:
        return [n for n in self._preorder if n.is_leaf]

    def to_dict(self) -> dict:
        def build(node: TreeNode) -> dict:
            d = {"name": node.name}
            if node.children:
                d["children"] = [build(c) for c in node.children]
            return d

        return build(self.root)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def from_dict(doc: dict) -> Hierarchy:
    """Build a hierarchy from nested {"name": ..., "children": [...]} dicts."""

    def build(d, where: str) -> TreeNode:
        if not isinstance(d, dict):
            raise ParseError(f"expected object at {where}, got {type(d).__name__}")
        if "name" not in d:
            raise ParseError(f"missing 'name' at {where}")
        name = d["name"]
        if not isinstance(name, str) or not name:
            raise ParseError(f"'name' must be a non-empty string at {where}")
        if "/" in name:
            raise ParseError(f"node name {name!r} may not contain '/'")
        node = TreeNode(id=-1, name=name)
        children = d.get("children", [])
        if not isinstance(children, list):
            raise ParseError(f"'children' must be a list at {where}/{name}")
        node.children = [build(c, f"{where}/{name}") for c in children]
        return node

    return Hierarchy(build(doc, ""))


def parse_nested_json(text: str) -> Hierarchy:
    """Parse a nested-JSON tree document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def parse_path_csv(text: str) -> Hierarchy:
    """Parse one slash-separated path per line; nodes created on first mention."""
    root: Optional[TreeNode] = None
    index: dict[str, TreeNode] = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.strip()
        if not line:
            continue
        segments = line.split("/")
        if any(not s for s in segments):
            raise ParseError(f"line {lineno}: empty path segment in {line!r}")
        if root is None:
            root = TreeNode(id=-1, name=segments[0])
            index[segments[0]] = root
        elif segments[0] != root.name:
            raise ParseError(
                f"line {lineno}: root {segments[0]!r} conflicts with {root.name!r}"
            )
        path = segments[0]
        node = root
        for segment in segments[1:]:
            path = f"{path}/{segment}"
            child = index.get(path)
            if child is None:
                child = TreeNode(id=-1, name=segment, parent=node)
                node.children.append(child)
                index[path] = child
            node = child
    if root is None:
        raise ParseError("empty document")
    return Hierarchy(root)


def lowest_common_ancestor(u: TreeNode, v: TreeNode) -> TreeNode:
    a, b = u, v
    while a.depth > b.depth:
        a = a.parent
    while b.depth > a.depth:
        b = b.parent
    while a is not b:
        if a.parent is None or b.parent is None:
            raise ValueError("nodes belong to different hierarchies")
        a, b = a.parent, b.parent
    return a


def tree_distance(u: TreeNode, v: TreeNode, variant: str = "max") -> int:
    """Distance as depth below the closest common ancestor.

    variant "max" (default) takes the deeper node's depth below the ancestor;
    "sum" takes the path length through the ancestor.
    """
    lca = lowest_common_ancestor(u, v)
    if variant == "max":
        return max(u.depth, v.depth) - lca.depth
    if variant == "sum":
        return (u.depth - lca.depth) + (v.depth - lca.depth)
    raise ValueError(f"unknown tree_distance variant {variant!r}")
