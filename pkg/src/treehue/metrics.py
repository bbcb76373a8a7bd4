"""Scores for the six hierarchical color map design rules.

All perceptual distances are Euclidean delta E*ab over the nominal (pre-clamp)
Lab colors. Pairwise computations are exact brute force; scopes larger than
PAIRWISE_CAP nodes fall back to a seeded sample of that size.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import stats

from .color_space import LabColor, delta_e, hcl_to_lab
from .hierarchy import Hierarchy, TreeNode, parse_path_csv, tree_distance
from .treecolors import NodeColor, PaletteAssignment, PaletteConfig

PAIRWISE_CAP = 5_000
_SAMPLE_SEED = 0x7C01


@dataclass(frozen=True)
class Scope:
    """Node selection for a metric: all | leaves | level(d) | within_siblings
    | between_subtrees."""

    kind: str
    level: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (
            "all",
            "leaves",
            "level",
            "within_siblings",
            "between_subtrees",
        ):
            raise ValueError(f"unknown scope kind {self.kind!r}")
        if self.kind == "level" and (self.level is None or self.level < 0):
            raise ValueError("level scope needs a non-negative depth")

    @property
    def label(self) -> str:
        return f"level:{self.level}" if self.kind == "level" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Scope":
        text = text.strip()
        if text.startswith("level:"):
            return cls("level", int(text.split(":", 1)[1]))
        return cls(text)


DEFAULT_SCOPES = (
    Scope("all"),
    Scope("leaves"),
    Scope("within_siblings"),
    Scope("between_subtrees"),
)


def _rebuild_hierarchy(p: PaletteAssignment) -> Hierarchy:
    # palette paths are in pre-order, so first-mention order recreates the tree
    return parse_path_csv("\n".join(e.path for e in p.entries))


def _lab(entry: NodeColor) -> LabColor:
    return hcl_to_lab(entry.color)


def _sampled(entries: list, seed_salt: int = 0) -> list:
    if len(entries) <= PAIRWISE_CAP:
        return entries
    rng = random.Random(_SAMPLE_SEED + seed_salt)
    return rng.sample(entries, PAIRWISE_CAP)


def _scope_entries(
    p: PaletteAssignment, h: Hierarchy, s: Scope
) -> list[list[NodeColor]]:
    """Groups of entries for a scope; pairwise metrics run within each group."""
    if s.kind == "all":
        return [list(p.entries)]
    if s.kind == "leaves":
        return [[p.by_path[n.path] for n in h.leaves]]
    if s.kind == "level":
        if s.level > h.max_depth:
            raise ValueError(f"level {s.level} exceeds max depth {h.max_depth}")
        return [[e for e in p.entries if e.depth == s.level]]
    if s.kind == "within_siblings":
        return [
            [p.by_path[c.path] for c in n.children]
            for n in h
            if len(n.children) >= 2
        ]
    if s.kind == "between_subtrees":
        return [list(p.entries)]  # pair filtering handled by the caller
    raise ValueError(f"unknown scope {s.kind!r}")


def _top_ancestor(node: TreeNode) -> Optional[TreeNode]:
    while node.depth > 1:
        node = node.parent
    return node if node.depth == 1 else None


def discriminative_power(p: PaletteAssignment, s: Scope) -> float:
    """Minimum pairwise delta E among the nodes the scope selects."""
    h = _rebuild_hierarchy(p)
    if s.kind == "between_subtrees":
        tops = {e.path: _top_ancestor(h.path_index[e.path]) for e in p.entries}
        nodes = _sampled([e for e in p.entries if tops[e.path] is not None])
        best = None
        for a, b in itertools.combinations(nodes, 2):
            if tops[a.path] is tops[b.path]:
                continue
            d = delta_e(_lab(a), _lab(b))
            best = d if best is None else min(best, d)
        if best is None:
            raise ValueError("between_subtrees scope needs >= 2 depth-1 sub-trees")
        return best
    groups = [g for g in _scope_entries(p, h, s) if len(g) >= 2]
    if not groups:
        raise ValueError(f"scope {s.label} selects fewer than 2 nodes")
    best = None
    for group in groups:
        for a, b in itertools.combinations(_sampled(group), 2):
            d = delta_e(_lab(a), _lab(b))
            best = d if best is None else min(best, d)
    return best


def order_violations(p: PaletteAssignment, cfg: PaletteConfig) -> int:
    """Parent->child edges whose luminance or chroma moves against the ramp.

    A degenerate (constant) interval exempts that channel.
    """
    l_dir = np.sign(cfg.luminance_interval[1] - cfg.luminance_interval[0])
    c_dir = np.sign(cfg.chroma_interval[1] - cfg.chroma_interval[0])
    h = _rebuild_hierarchy(p)
    count = 0
    for node in h:
        if node.parent is None:
            continue
        child = p.by_path[node.path]
        parent = p.by_path[node.parent.path]
        bad = False
        if l_dir != 0 and np.sign(child.color.l - parent.color.l) != l_dir:
            bad = True
        if c_dir != 0 and np.sign(child.color.c - parent.color.c) != c_dir:
            bad = True
        if bad:
            count += 1
    return count


def uniformity(
    p: PaletteAssignment, distance_variant: str = "max"
) -> Optional[float]:
    """Spearman correlation of pairwise delta E against tree distance.

    Returns None when the correlation is undefined (constant ranks).
    """
    if len(p.entries) < 3:
        raise ValueError("uniformity needs at least 3 nodes")
    h = _rebuild_hierarchy(p)
    entries = _sampled(list(p.entries), seed_salt=1)
    des, tds = [], []
    for a, b in itertools.combinations(entries, 2):
        des.append(delta_e(_lab(a), _lab(b)))
        tds.append(
            tree_distance(
                h.path_index[a.path], h.path_index[b.path], distance_variant
            )
        )
    if len(set(des)) < 2 or len(set(tds)) < 2:
        return None
    rho = stats.spearmanr(des, tds).statistic
    return None if np.isnan(rho) else float(rho)


def parent_child_gap(p: PaletteAssignment) -> tuple[float, float]:
    """(mean delta E over parent-child edges, mean over all other pairs)."""
    h = _rebuild_hierarchy(p)
    edges = {
        frozenset((n.path, n.parent.path)) for n in h if n.parent is not None
    }
    adjacent, distant = [], []
    for a, b in itertools.combinations(_sampled(list(p.entries), 2), 2):
        d = delta_e(_lab(a), _lab(b))
        if frozenset((a.path, b.path)) in edges:
            adjacent.append(d)
        else:
            distant.append(d)
    if not adjacent or not distant:
        raise ValueError("parent_child_gap needs both edge and non-edge pairs")
    return float(np.mean(adjacent)), float(np.mean(distant))


def importance_spread(p: PaletteAssignment, s: Scope) -> tuple[float, float]:
    """Population std-dev of (luminance, chroma) over a scope."""
    h = _rebuild_hierarchy(p)
    groups = _scope_entries(p, h, s)
    entries = [e for g in groups for e in g]
    if not entries:
        raise ValueError(f"scope {s.label} is empty")
    ls = np.array([e.color.l for e in entries])
    cs = np.array([e.color.c for e in entries])
    return float(np.std(ls)), float(np.std(cs))


def background_contrast(p: PaletteAssignment, background_l: float) -> float:
    """Worst-case luminance contrast against the background."""
    if not 0.0 <= background_l <= 100.0:
        raise ValueError(f"background luminance {background_l} outside [0, 100]")
    return min(abs(e.color.l - background_l) for e in p.entries)


def gamut_coverage(p: PaletteAssignment) -> tuple[float, float]:
    """(in-gamut fraction, max delta E moved by clamping)."""
    total = len(p.entries)
    in_gamut = sum(1 for e in p.entries if e.in_gamut)
    max_clamp = max((e.clamp_distance for e in p.entries), default=0.0)
    return in_gamut / total, max_clamp


@dataclass
class MetricReport:
    """Scores for the six design rules, JSON-serializable with stable names."""

    discriminative_power: dict[str, Optional[float]]
    uniformity: Optional[float]
    order_violations: int
    parent_child_gap: Optional[dict[str, float]]
    importance_spread: dict[str, dict[str, float]]
    background_contrast: float
    gamut_coverage: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "discriminative_power": self.discriminative_power,
            "uniformity": self.uniformity,
            "order_violations": self.order_violations,
            "parent_child_gap": self.parent_child_gap,
            "importance_spread": self.importance_spread,
            "background_contrast": self.background_contrast,
            "gamut_coverage": self.gamut_coverage,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def rows(self) -> list[tuple[str, str, float]]:
        """Flatten to (metric, scope, value) rows for CSV output."""
        out = []
        for scope, value in self.discriminative_power.items():
            if value is not None:
                out.append(("discriminative_power", scope, value))
        if self.uniformity is not None:
            out.append(("uniformity", "all", self.uniformity))
        out.append(("order_violations", "all", float(self.order_violations)))
        if self.parent_child_gap is not None:
            out.append(
                ("parent_child_gap_mean", "edges", self.parent_child_gap["mean_parent_child"])
            )
            out.append(
                ("parent_child_gap_mean", "non_adjacent", self.parent_child_gap["mean_non_adjacent"])
            )
        for scope, spread in self.importance_spread.items():
            out.append(("importance_spread_luminance", scope, spread["std_luminance"]))
            out.append(("importance_spread_chroma", scope, spread["std_chroma"]))
        out.append(("background_contrast", "all", self.background_contrast))
        out.append(("gamut_fraction", "all", self.gamut_coverage["fraction"]))
        out.append(
            ("max_clamp_distance", "all", self.gamut_coverage["max_clamp_distance"])
        )
        return out


def compute_report(
    p: PaletteAssignment,
    background_l: float = 100.0,
    scopes: tuple[Scope, ...] = DEFAULT_SCOPES,
    distance_variant: str = "max",
) -> MetricReport:
    """Evaluate every design rule; scopes that select too few nodes score None."""
    power: dict[str, Optional[float]] = {}
    spread: dict[str, dict[str, float]] = {}
    for s in scopes:
        try:
            power[s.label] = discriminative_power(p, s)
        except ValueError:
            power[s.label] = None
        try:
            std_l, std_c = importance_spread(p, s)
            spread[s.label] = {"std_luminance": std_l, "std_chroma": std_c}
        except ValueError:
            pass
    try:
        rho = uniformity(p, distance_variant)
    except ValueError:
        rho = None
    try:
        mean_edge, mean_rest = parent_child_gap(p)
        gap = {"mean_parent_child": mean_edge, "mean_non_adjacent": mean_rest}
    except ValueError:
        gap = None
    fraction, max_clamp = gamut_coverage(p)
    return MetricReport(
        discriminative_power=power,
        uniformity=rho,
        order_violations=order_violations(p, p.config),
        parent_child_gap=gap,
        importance_spread=spread,
        background_contrast=background_contrast(p, background_l),
        gamut_coverage={"fraction": fraction, "max_clamp_distance": max_clamp},
    )
