"""Recursive hue-range subdivision with depth-based chroma/luminance ramps.

The engine assigns every node of a hierarchy an HCL color: hues come from
recursively splitting the parent's hue range among children (with optional
gaps, permutation and excluded hue slices), chroma and luminance are
interpolated along the depth, either against the whole tree (global) or
per branch (local).

Hue exclusion works on a reduced "virtual" circle: all splitting and gap
arithmetic happens in allowed-hue measure, and nominal virtual hues are
mapped onto the allowed arcs at the very end.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace

from .color_space import (
    GamutCheck,
    HclColor,
    check_gamut,
    hcl_to_hex,
)
from .hierarchy import Hierarchy, TreeNode

FULL_CIRCLE = 360.0

SPLIT_MODES = ("even", "proportional")
PERMUTE_STRATEGIES = ("none", "interleave", "seeded")
INTERPOLATION_MODES = ("global", "local")


class ConfigError(ValueError):
    """Invalid palette configuration."""


@dataclass(frozen=True)
class HueRange:
    """Half-open arc [start, start + width) in degrees.

    circular marks the root's full circle, whose first/last sibling gap wraps.
    """

    start: float
    width: float
    circular: bool = False

    def __post_init__(self):
        if not 0.0 < self.width <= FULL_CIRCLE:
            raise ConfigError(f"hue range width {self.width} outside (0, 360]")
        object.__setattr__(self, "start", self.start % FULL_CIRCLE)

    @property
    def end(self) -> float:
        return self.start + self.width

    @property
    def center(self) -> float:
        return self.start + self.width / 2.0


@dataclass(frozen=True)
class PaletteConfig:
    hue_range: HueRange = HueRange(0.0, FULL_CIRCLE, circular=True)
    hue_fraction: float = 0.9
    split_mode: str = "even"
    permute: str = "interleave"
    seed: int = 0
    interpolation_mode: str = "global"
    luminance_interval: tuple[float, float] = (95.0, 57.0)
    chroma_interval: tuple[float, float] = (10.0, 45.0)
    excluded_slices: tuple[tuple[float, float], ...] = ()
    recurse_on_shrunk_range: bool = True

    def __post_init__(self):
        if not 0.0 < self.hue_fraction <= 1.0:
            raise ConfigError(f"hue_fraction {self.hue_fraction} outside (0, 1]")
        if self.split_mode not in SPLIT_MODES:
            raise ConfigError(f"unknown split_mode {self.split_mode!r}")
        if self.permute not in PERMUTE_STRATEGIES:
            raise ConfigError(f"unknown permute strategy {self.permute!r}")
        if self.interpolation_mode not in INTERPOLATION_MODES:
            raise ConfigError(
                f"unknown interpolation_mode {self.interpolation_mode!r}"
            )
        for v in self.luminance_interval:
            if not 0.0 <= v <= 100.0:
                raise ConfigError(f"luminance endpoint {v} outside [0, 100]")
        for v in self.chroma_interval:
            if v < 0.0:
                raise ConfigError(f"chroma endpoint {v} negative")
        object.__setattr__(
            self, "excluded_slices", validate_exclusions(self.excluded_slices)
        )

    def to_dict(self) -> dict:
        return {
            "hue_range": {"start": self.hue_range.start, "width": self.hue_range.width},
            "hue_fraction": self.hue_fraction,
            "split_mode": self.split_mode,
            "permute": self.permute,
            "seed": self.seed,
            "interpolation_mode": self.interpolation_mode,
            "luminance_interval": list(self.luminance_interval),
            "chroma_interval": list(self.chroma_interval),
            "excluded_slices": [list(s) for s in self.excluded_slices],
            "recurse_on_shrunk_range": self.recurse_on_shrunk_range,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PaletteConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        known = {
            "hue_range",
            "hue_fraction",
            "split_mode",
            "permute",
            "seed",
            "interpolation_mode",
            "luminance_interval",
            "chroma_interval",
            "excluded_slices",
            "recurse_on_shrunk_range",
        }
        for key in doc:
            if key not in known:
                raise ConfigError(f"unknown config key: {key!r}")
        kwargs = {}
        if "hue_range" in doc:
            hr = doc["hue_range"]
            if not isinstance(hr, dict) or set(hr) - {"start", "width"}:
                raise ConfigError("hue_range must be {'start':..., 'width':...}")
            width = float(hr.get("width", FULL_CIRCLE))
            kwargs["hue_range"] = HueRange(
                float(hr.get("start", 0.0)), width, circular=width == FULL_CIRCLE
            )
        for key in ("hue_fraction", "split_mode", "permute", "interpolation_mode",
                    "recurse_on_shrunk_range"):
            if key in doc:
                kwargs[key] = doc[key]
        if "seed" in doc:
            kwargs["seed"] = int(doc["seed"])
        for key in ("luminance_interval", "chroma_interval"):
            if key in doc:
                iv = doc[key]
                if not isinstance(iv, (list, tuple)) or len(iv) != 2:
                    raise ConfigError(f"{key} must be a two-element list")
                kwargs[key] = (float(iv[0]), float(iv[1]))
        if "excluded_slices" in doc:
            try:
                kwargs["excluded_slices"] = tuple(
                    (float(s[0]), float(s[1])) for s in doc["excluded_slices"]
                )
            except (TypeError, IndexError) as exc:
                raise ConfigError("excluded_slices must be [start, end] pairs") from exc
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc


def validate_exclusions(
    slices: tuple[tuple[float, float], ...],
) -> tuple[tuple[float, float], ...]:
    """Sort and validate excluded [start, end) arcs; total must stay below 180."""
    normalized = []
    for s in slices:
        start, end = float(s[0]), float(s[1])
        if not (0.0 <= start < end <= FULL_CIRCLE):
            raise ConfigError(f"excluded slice [{start}, {end}) out of order or bounds")
        normalized.append((start, end))
    normalized.sort()
    for (s1, e1), (s2, _) in zip(normalized, normalized[1:]):
        if s2 < e1:
            raise ConfigError(f"excluded slices overlap near {s2}")
    total = sum(e - s for s, e in normalized)
    if total >= 180.0:
        raise ConfigError(f"total excluded hue {total} must be < 180 degrees")
    return tuple(normalized)


def excluded_width(slices: tuple[tuple[float, float], ...]) -> float:
    return sum(e - s for s, e in slices)


def split_hue_range(
    rng: HueRange, children: list[TreeNode], mode: str
) -> list[HueRange]:
    """Partition a range among children in order, with no gaps.

    Even mode gives equal widths; proportional mode weights by leaf count.
    """
    if not children:
        raise ValueError("split_hue_range requires at least one child")
    if mode == "even":
        weights = [1.0] * len(children)
    elif mode == "proportional":
        weights = [float(c.leaf_count) for c in children]
    else:
        raise ConfigError(f"unknown split_mode {mode!r}")
    total = sum(weights)
    ranges = []
    cumulative = 0.0
    for w in weights:
        start = rng.start + rng.width * (cumulative / total)
        width = rng.width * (w / total)
        ranges.append(HueRange(start, width))
        cumulative += w
    return ranges


def shrink_range(rng: HueRange, fraction: float) -> HueRange:
    """Centered sub-range of width fraction * width; a full circle is unchanged."""
    if not 0.0 < fraction <= 1.0:
        raise ConfigError(f"hue fraction {fraction} outside (0, 1]")
    if rng.circular:
        return rng
    width = rng.width * fraction
    start = rng.start + (rng.width - width) / 2.0
    return HueRange(start, width)


def permute_siblings(
    count: int, strategy: str, seed: int = 0, node_id: int = 0
) -> list[int]:
    """Permutation of 0..count-1; seeded variant is reproducible per node."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if strategy == "none":
        return list(range(count))
    if strategy == "interleave":
        half = (count + 1) // 2
        out = []
        for i in range(half):
            out.append(i)
            if half + i < count:
                out.append(half + i)
        return out
    if strategy == "seeded":
        rng = random.Random(f"{seed}:{node_id}")
        out = list(range(count))
        rng.shuffle(out)
        return out
    raise ConfigError(f"unknown permute strategy {strategy!r}")


def interpolation_factor(node: TreeNode, mode: str, max_depth: int) -> float:
    """Depth fraction in [0, 1]: global uses the tree's max depth, local the branch."""
    if mode == "global":
        return 0.0 if max_depth == 0 else node.depth / max_depth
    if mode == "local":
        span = node.depth + node.height
        return 0.0 if span == 0 else node.depth / span
    raise ConfigError(f"unknown interpolation_mode {mode!r}")


def map_excluded_hue(
    nominal: float, exclusions: tuple[tuple[float, float], ...]
) -> float:
    """Map a virtual-circle hue onto the allowed arcs, skipping excluded slices."""
    exclusions = validate_exclusions(exclusions)
    if not exclusions:
        return nominal % FULL_CIRCLE
    virtual_width = FULL_CIRCLE - excluded_width(exclusions)
    v = nominal % virtual_width
    # allowed arcs in ascending order
    arcs = []
    cursor = 0.0
    for start, end in exclusions:
        if start > cursor:
            arcs.append((cursor, start))
        cursor = end
    if cursor < FULL_CIRCLE:
        arcs.append((cursor, FULL_CIRCLE))
    offset = 0.0
    for start, end in arcs:
        width = end - start
        if v < offset + width:
            return start + (v - offset)
        offset += width
    return arcs[-1][0]  # v == virtual_width up to rounding


@dataclass(frozen=True)
class NodeColor:
    """One palette entry: nominal virtual hue plus the realized HCL color."""

    path: str
    depth: int
    factor: float
    hue: float
    color: HclColor
    hex: str
    in_gamut: bool
    clamped: HclColor
    clamped_hex: str
    clamp_distance: float
    range_start: float
    range_width: float

    def to_dict(self) -> dict:
        return {
            "path": self.path,
            "depth": self.depth,
            "factor": self.factor,
            "hue": self.hue,
            "actual_hue": self.color.h,
            "chroma": self.color.c,
            "luminance": self.color.l,
            "hex": self.hex,
            "in_gamut": self.in_gamut,
            "clamped_hex": self.clamped_hex,
            "clamp_distance": self.clamp_distance,
            "range_start": self.range_start,
            "range_width": self.range_width,
        }


@dataclass
class PaletteAssignment:
    """Node-path -> color map in hierarchy pre-order, echoing its config."""

    config: PaletteConfig
    entries: list[NodeColor]
    by_path: dict[str, NodeColor] = field(init=False)

    def __post_init__(self):
        self.by_path = {e.path: e for e in self.entries}

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "nodes": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "PaletteAssignment":
        if not isinstance(doc, dict) or "config" not in doc or "nodes" not in doc:
            raise ConfigError("palette document needs 'config' and 'nodes'")
        config = PaletteConfig.from_dict(doc["config"])
        entries = []
        for n in doc["nodes"]:
            color = HclColor(n["actual_hue"], n["chroma"], n["luminance"])
            check = (
                GamutCheck(True, color, 0.0)
                if n["in_gamut"]
                else check_gamut(color)
            )
            entries.append(
                NodeColor(
                    path=n["path"],
                    depth=int(n["depth"]),
                    factor=float(n["factor"]),
                    hue=float(n["hue"]),
                    color=color,
                    hex=n["hex"],
                    in_gamut=bool(n["in_gamut"]),
                    clamped=check.clamped,
                    clamped_hex=n["clamped_hex"],
                    clamp_distance=float(n.get("clamp_distance", check.clamp_distance)),
                    range_start=float(n["range_start"]),
                    range_width=float(n["range_width"]),
                )
            )
        return cls(config=config, entries=entries)

    @classmethod
    def from_json(cls, text: str) -> "PaletteAssignment":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid palette JSON: {exc}") from exc
        return cls.from_dict(doc)


def _lerp(interval: tuple[float, float], t: float) -> float:
    return interval[0] + t * (interval[1] - interval[0])


def assign_colors(h: Hierarchy, cfg: PaletteConfig) -> PaletteAssignment:
    """Color every node of the hierarchy; deterministic for fixed inputs."""
    exclusions = cfg.excluded_slices
    virtual_total = FULL_CIRCLE - excluded_width(exclusions)
    if cfg.hue_range.width == FULL_CIRCLE:
        root_range = HueRange(cfg.hue_range.start, virtual_total, circular=True)
    else:
        if cfg.hue_range.width > virtual_total:
            raise ConfigError(
                "hue_range wider than the circle remaining after exclusions"
            )
        root_range = cfg.hue_range

    colored: dict[int, NodeColor] = {}

    def color_node(node: TreeNode, sub: HueRange, shrunk: HueRange):
        factor = interpolation_factor(node, cfg.interpolation_mode, h.max_depth)
        nominal = shrunk.center % virtual_total
        actual_hue = map_excluded_hue(nominal, exclusions)
        color = HclColor(
            actual_hue,
            _lerp(cfg.chroma_interval, factor),
            _lerp(cfg.luminance_interval, factor),
        )
        check = check_gamut(color)
        hex_code = hcl_to_hex(color)
        colored[node.id] = NodeColor(
            path=node.path,
            depth=node.depth,
            factor=factor,
            hue=nominal,
            color=color,
            hex=hex_code,
            in_gamut=check.in_gamut,
            clamped=check.clamped,
            clamped_hex=hex_code if check.in_gamut else hcl_to_hex(check.clamped),
            clamp_distance=check.clamp_distance,
            range_start=sub.start,
            range_width=sub.width,
        )
        if not node.children:
            return
        recursion_range = shrunk if cfg.recurse_on_shrunk_range else sub
        order = permute_siblings(
            len(node.children), cfg.permute, cfg.seed, node.id
        )
        placed = [node.children[i] for i in order]
        subs = split_hue_range(recursion_range, placed, cfg.split_mode)
        for child, child_sub in zip(placed, subs):
            color_node(child, child_sub, shrink_range(child_sub, cfg.hue_fraction))

    color_node(h.root, root_range, shrink_range(root_range, cfg.hue_fraction))
    entries = [colored[node.id] for node in h]  # hierarchy pre-order
    return PaletteAssignment(config=cfg, entries=entries)


# Table-driven presets: theme fixes the chroma/luminance intervals, size the
# hue fraction, analysis focus the interpolation and split modes.
THEMES = {
    "light": {"luminance_interval": (95.0, 57.0), "chroma_interval": (10.0, 45.0)},
    "dark": {"luminance_interval": (26.0, 76.0), "chroma_interval": (20.0, 59.0)},
}
SIZES = {"small": 0.75, "larger": 0.9}
FOCUSES = {
    "top_down": {"interpolation_mode": "global", "split_mode": "even"},
    "bottom_up": {"interpolation_mode": "local", "split_mode": "proportional"},
}


def preset(theme: str, size: str, focus: str) -> PaletteConfig:
    """Recommended configuration for a theme/size/focus combination.

    The small-hierarchy intervals are provisional: the source table gives no
    numbers for them, so they borrow the larger-hierarchy intervals of the
    same theme. Size only sets the hue fraction; focus picks interpolation
    and split (for small hierarchies either choice is considered fine, the
    requested focus is honored anyway).
    """
    if theme not in THEMES:
        raise ConfigError(f"unknown theme {theme!r}")
    if size not in SIZES:
        raise ConfigError(f"unknown size {size!r}")
    if focus not in FOCUSES:
        raise ConfigError(f"unknown focus {focus!r}")
    return PaletteConfig(
        hue_fraction=SIZES[size], **THEMES[theme], **FOCUSES[focus]
    )


def list_presets() -> list[dict]:
    """All eight preset configurations in stable order, with labels."""
    out = []
    for theme in ("light", "dark"):
        for size in ("small", "larger"):
            for focus in ("top_down", "bottom_up"):
                out.append(
                    {
                        "label": f"{theme},{size},{focus}",
                        "theme": theme,
                        "size": size,
                        "focus": focus,
                        "config": preset(theme, size, focus).to_dict(),
                    }
                )
    return out


def parse_preset_label(label: str) -> PaletteConfig:
    parts = [p.strip() for p in label.split(",")]
    if len(parts) != 3:
        raise ConfigError(f"preset must be 'theme,size,focus', got {label!r}")
    return preset(*parts)


def with_seed(cfg: PaletteConfig, seed: int) -> PaletteConfig:
    return replace(cfg, seed=seed)


class CoverageError(ValueError):
    """Palette and hierarchy do not describe the same node set."""


def ensure_covers(p: PaletteAssignment, h: Hierarchy) -> None:
    palette_paths = set(p.by_path)
    tree_paths = set(h.path_index)
    if palette_paths != tree_paths:
        missing = sorted(tree_paths - palette_paths)[:3]
        extra = sorted(palette_paths - tree_paths)[:3]
        raise CoverageError(
            f"palette does not cover hierarchy (missing={missing}, extra={extra})"
        )
