"""Command-line entry point: generate, evaluate, render, compare, serve.

Exit codes: 0 success, 2 parse error (E_PARSE), 3 config error (E_CONFIG),
4 palette/hierarchy coverage mismatch (E_COVERAGE). Structured output goes
to stdout, diagnostics to stderr. TREEHUE_SEED overrides the permutation
seed of any loaded configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import metrics as metrics_mod
from .hierarchy import Hierarchy, ParseError, parse_nested_json, parse_path_csv
from .render import RenderSpec, render
from .treecolors import (
    ConfigError,
    CoverageError,
    PaletteAssignment,
    PaletteConfig,
    assign_colors,
    ensure_covers,
    list_presets,
    parse_preset_label,
    with_seed,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONFIG = 3
EXIT_COVERAGE = 4

# Keys allowed in a CLI config file beyond the palette configuration itself.
CLI_ONLY_KEYS = {"input", "format", "output", "background_l", "scopes"}


class CliError(Exception):
    def __init__(self, code: int, prefix: str, message: str):
        super().__init__(message)
        self.code = code
        self.prefix = prefix


def _parse_error(msg: str) -> CliError:
    return CliError(EXIT_PARSE, "E_PARSE", msg)


def _config_error(msg: str) -> CliError:
    return CliError(EXIT_CONFIG, "E_CONFIG", msg)


def _read_text(path: str, kind: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _parse_error(f"cannot read {kind} {path!r}: {exc}") from exc


def load_hierarchy(path: str, fmt: str) -> Hierarchy:
    text = _read_text(path, "input")
    try:
        if fmt == "csv":
            return parse_path_csv(text)
        return parse_nested_json(text)
    except ValueError as exc:
        raise _parse_error(str(exc)) from exc


def load_cli_config(path: str) -> tuple[PaletteConfig, dict]:
    """Read a CLI config file: palette config plus CLI-only keys."""
    text = _read_text(path, "config")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _config_error(f"invalid config JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise _config_error("config file must hold a JSON object")
    extras = {k: doc.pop(k) for k in list(doc) if k in CLI_ONLY_KEYS}
    try:
        cfg = PaletteConfig.from_dict(doc)
    except ConfigError as exc:
        raise _config_error(str(exc)) from exc
    return cfg, extras


def _apply_seed_override(cfg: PaletteConfig) -> PaletteConfig:
    env = os.environ.get("TREEHUE_SEED")
    if env is None:
        return cfg
    try:
        return with_seed(cfg, int(env))
    except ValueError as exc:
        raise _config_error(f"TREEHUE_SEED must be an integer, got {env!r}") from exc


def _resolve_config(args) -> PaletteConfig:
    if bool(args.config) == bool(args.preset):
        raise _config_error("exactly one of --config or --preset is required")
    if args.preset:
        try:
            cfg = parse_preset_label(args.preset)
        except ConfigError as exc:
            raise _config_error(str(exc)) from exc
    else:
        cfg, _ = load_cli_config(args.config)
    return _apply_seed_override(cfg)


def cmd_generate(args) -> int:
    cfg = _resolve_config(args)
    h = load_hierarchy(args.input, args.format)
    palette = assign_colors(h, cfg)
    text = palette.to_json()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def _load_palette(path: str) -> PaletteAssignment:
    text = _read_text(path, "palette")
    try:
        return PaletteAssignment.from_json(text)
    except ValueError as exc:
        raise _parse_error(str(exc)) from exc


def _parse_scopes(text: str) -> tuple:
    try:
        return tuple(metrics_mod.Scope.parse(s) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise _config_error(str(exc)) from exc


def cmd_evaluate(args) -> int:
    palette = _load_palette(args.palette)
    h = load_hierarchy(args.hierarchy, args.format)
    try:
        ensure_covers(palette, h)
    except CoverageError as exc:
        raise CliError(EXIT_COVERAGE, "E_COVERAGE", str(exc)) from exc
    scopes = (
        _parse_scopes(args.scopes) if args.scopes else metrics_mod.DEFAULT_SCOPES
    )
    report = metrics_mod.compute_report(
        palette, background_l=args.background, scopes=scopes
    )
    sys.stdout.write(report.to_json() + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    palette = _load_palette(args.palette)
    h = load_hierarchy(args.hierarchy, args.format)
    try:
        spec = RenderSpec(
            layout=args.layout,
            size=args.size,
            background=args.background,
            label=args.labels,
            show_gaps=args.show_gaps,
        )
    except ValueError as exc:
        raise _config_error(str(exc)) from exc
    try:
        svg = render(h, palette, spec)
    except CoverageError as exc:
        raise CliError(EXIT_COVERAGE, "E_COVERAGE", str(exc)) from exc
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_compare(args) -> int:
    h = load_hierarchy(args.input, args.format)
    configs: list[tuple[str, PaletteConfig]] = []
    if args.all_presets:
        for entry in list_presets():
            configs.append((entry["label"], PaletteConfig.from_dict(entry["config"])))
    if args.configs:
        directory = Path(args.configs)
        if not directory.is_dir():
            raise _parse_error(f"--configs {args.configs!r} is not a directory")
        for path in sorted(directory.glob("*.json")):
            cfg, _ = load_cli_config(str(path))
            configs.append((path.stem, cfg))
    if not configs:
        raise _config_error("compare needs --configs DIR and/or --all-presets")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["config", "metric", "scope", "value"])
    for label, cfg in configs:
        cfg = _apply_seed_override(cfg)
        palette = assign_colors(h, cfg)
        report = metrics_mod.compute_report(palette, background_l=args.background)
        for metric, scope, value in report.rows():
            writer.writerow([label, metric, scope, repr(value)])
    if args.out:
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(cors=not args.no_cors)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"E_CONFIG: cannot serve on port {args.port}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treehue", description="Hierarchical color map toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="assign colors to a hierarchy")
    gen.add_argument("--input", required=True)
    gen.add_argument("--format", choices=("json", "csv"), default="json")
    gen.add_argument("--config")
    gen.add_argument("--preset", help="theme,size,focus e.g. light,larger,top_down")
    gen.add_argument("--output")
    gen.set_defaults(func=cmd_generate)

    ev = sub.add_parser("evaluate", help="score a palette against the design rules")
    ev.add_argument("--palette", required=True)
    ev.add_argument("--hierarchy", required=True)
    ev.add_argument("--format", choices=("json", "csv"), default="json")
    ev.add_argument("--background", type=float, default=100.0)
    ev.add_argument("--scopes", help="comma list: all,leaves,level:N,within_siblings,between_subtrees")
    ev.set_defaults(func=cmd_evaluate)

    rd = sub.add_parser("render", help="emit an SVG view of a palette")
    rd.add_argument("--palette", required=True)
    rd.add_argument("--hierarchy", required=True)
    rd.add_argument("--format", choices=("json", "csv"), default="json")
    rd.add_argument("--layout", choices=("swatch", "sunburst", "icicle"), default="sunburst")
    rd.add_argument("--size", type=int, default=512)
    rd.add_argument("--background", default="#ffffff")
    rd.add_argument("--labels", action="store_true")
    rd.add_argument("--show-gaps", action="store_true", dest="show_gaps")
    rd.add_argument("--out")
    rd.set_defaults(func=cmd_render)

    cp = sub.add_parser("compare", help="sweep configs and emit a metrics CSV")
    cp.add_argument("--input", required=True)
    cp.add_argument("--format", choices=("json", "csv"), default="json")
    cp.add_argument("--configs", help="directory of *.json config files")
    cp.add_argument("--all-presets", action="store_true", dest="all_presets")
    cp.add_argument("--background", type=float, default=100.0)
    cp.add_argument("--out")
    cp.set_defaults(func=cmd_compare)

    sv = sub.add_parser("serve", help="start the HTTP service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8571)
    sv.add_argument("--no-cors", action="store_true", dest="no_cors")
    sv.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"{exc.prefix}: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"E_PARSE: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConfigError as exc:
        print(f"E_CONFIG: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CoverageError as exc:
        print(f"E_COVERAGE: {exc}", file=sys.stderr)
        return EXIT_COVERAGE


if __name__ == "__main__":
    sys.exit(main())
