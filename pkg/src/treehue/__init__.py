"""treehue: hierarchical color maps with perceptual quality metrics."""

from .color_space import (
    GamutCheck,
    HclColor,
    LabColor,
    SrgbColor,
    check_gamut,
    delta_e,
    hcl_to_lab,
    lab_to_hcl,
    lab_to_srgb,
    srgb_to_lab,
    to_hex,
)
from .hierarchy import (
    Hierarchy,
    TreeNode,
    parse_nested_json,
    parse_path_csv,
    tree_distance,
)
from .metrics import MetricReport, Scope, compute_report
from .render import RenderSpec, render, render_icicle, render_sunburst, render_swatch
from .treecolors import (
    HueRange,
    NodeColor,
    PaletteAssignment,
    PaletteConfig,
    assign_colors,
    interpolation_factor,
    list_presets,
    map_excluded_hue,
    permute_siblings,
    preset,
    shrink_range,
    split_hue_range,
)

__version__ = "0.1.0"
