"""
Comparing the recommended presets
=================================

Run all eight recommended configurations over one hierarchy and compare
them with the built-in design-rule metrics: minimum perceptual distance,
rank agreement with tree distance, gamut coverage and more.
"""

from treehue import assign_colors, compute_report, parse_path_csv, preset

# a three-level hierarchy from slash-separated paths (one leaf per line)
tree = parse_path_csv("\n".join(
    f"org/{division}/{team}/{member}"
    for division, teams in (
        ("product", ("design", "research")),
        ("engineering", ("platform", "apps", "data")),
        ("sales", ("emea",)),
    )
    for team in teams
    for member in ("lead", "senior", "junior")
))
print("nodes:", len(tree.path_index))

# evaluate every theme/size/focus combination against a white background
header = f"{'preset':28} {'minDE(all)':>10} {'uniformity':>10} {'in-gamut':>9}"
print(header)
print("-" * len(header))
for theme in ("light", "dark"):
    for size in ("small", "larger"):
        for focus in ("top_down", "bottom_up"):
            cfg = preset(theme, size, focus)
            palette = assign_colors(tree, cfg)
            report = compute_report(palette, background_l=100.0)
            doc = report.to_dict()
            rho = doc["uniformity"]
            print(
                f"{theme + ',' + size + ',' + focus:28}"
                f" {doc['discriminative_power']['all']:>10.2f}"
                f" {rho if rho is None else round(rho, 3)!s:>10}"
                f" {doc['gamut_coverage']['fraction']:>9.0%}"
            )

# the report also carries order violations (should always be 0 for engine
# output) and the chroma/luminance spread across equally important nodes
cfg = preset("light", "larger", "bottom_up")
doc = compute_report(assign_colors(tree, cfg)).to_dict()
print("\norder violations:", doc["order_violations"])
print("leaf chroma/luminance spread:", doc["importance_spread"]["leaves"])
