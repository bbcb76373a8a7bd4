"""
A first hierarchical palette
============================

Parse a small hierarchy, color it with a recommended preset and render
the result as a sunburst SVG next to this script.
"""

# parse a nested hierarchy: every node gets a slash-joined path
from treehue import parse_nested_json

tree = parse_nested_json(
    """
    {"name": "spend", "children": [
        {"name": "housing", "children": [{"name": "rent"}, {"name": "power"}]},
        {"name": "food", "children": [{"name": "groceries"},
                                      {"name": "restaurants"},
                                      {"name": "coffee"}]},
        {"name": "travel"}
    ]}
    """
)
print("nodes:", len(tree.path_index), "max depth:", tree.max_depth)

# pick a recommended configuration: light background, larger hierarchy,
# top-down reading (global interpolation + even hue split)
from treehue import assign_colors, preset

palette = assign_colors(tree, preset("light", "larger", "top_down"))
for entry in palette.entries:
    print(f"{entry.hex}  {'  ' * entry.depth}{entry.path}")

# render the palette as a sunburst; fills use the gamut-safe hex codes
from treehue import RenderSpec, render

svg = render(tree, palette, RenderSpec(layout="sunburst", size=512, label=True))
with open("first_palette.svg", "w") as fh:
    fh.write(svg)
print("wrote first_palette.svg")
