"""
Turning the design knobs
========================

Show what the main configuration knobs do: the hue fraction that opens
gaps between sibling hue ranges, the even/proportional hue split, and
excluded hue slices for reserved signal colors.
"""

import json

from treehue import PaletteConfig, RenderSpec, assign_colors, parse_nested_json, render

# an imbalanced tree makes the knobs visible: sub-trees with 1, 2 and 3 leaves
tree = parse_nested_json(json.dumps({
    "name": "root",
    "children": [
        {"name": "a", "children": [{"name": "a1"}]},
        {"name": "b", "children": [{"name": "b1"}, {"name": "b2"}]},
        {"name": "c", "children": [{"name": "c1"}, {"name": "c2"}, {"name": "c3"}]},
    ],
}))

# hue fraction: 1.0 tiles the circle seamlessly, smaller values open gaps
# between sibling ranges ((1-f) of each range becomes separating arc)
for fraction in (1.0, 0.9, 0.75):
    palette = assign_colors(tree, PaletteConfig(hue_fraction=fraction, permute="none"))
    spans = []
    for e in palette.entries:
        if e.depth == 1:
            margin = (1 - fraction) * e.range_width / 2
            spans.append(
                (round(e.range_start + margin, 1),
                 round(e.range_start + e.range_width - margin, 1))
            )
    print(f"f={fraction}: level-1 occupied hue spans {spans}")

# even vs proportional split: equal sub-ranges per child, or sub-ranges
# weighted by leaf count so large sub-trees get more hue room
for mode in ("even", "proportional"):
    palette = assign_colors(tree, PaletteConfig(split_mode=mode, permute="none"))
    widths = [e.range_width for e in palette.entries if e.depth == 1]
    print(f"{mode} split: level-1 range widths {widths}")

# excluded slices: reserve hues (say reds around 0 for error markers);
# the engine plans on the remaining 348-degree circle
reserved = PaletteConfig(excluded_slices=((0.0, 6.0), (354.0, 360.0)))
palette = assign_colors(tree, reserved)
print("hues with reds excluded:", [round(e.color.h, 1) for e in palette.entries])

# icicle renderings before/after make the gap effect easy to see
for name, cfg in (
    ("seamless", PaletteConfig(hue_fraction=1.0, permute="none")),
    ("gapped", PaletteConfig(hue_fraction=0.75, permute="none")),
):
    svg = render(tree, assign_colors(tree, cfg), RenderSpec(layout="icicle", size=512))
    with open(f"knobs_{name}.svg", "w") as fh:
        fh.write(svg)
    print(f"wrote knobs_{name}.svg")
