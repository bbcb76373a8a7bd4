import json

import pytest

from conftest import WHEEL_TREE
from treehue.cli import main
from treehue.treecolors import PaletteAssignment


@pytest.fixture
def tree_file(tmp_path):
    path = tmp_path / "tree.json"
    path.write_text(json.dumps(WHEEL_TREE))
    return str(path)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps(
            {
                "hue_fraction": 0.8,
                "split_mode": "proportional",
                "permute": "seeded",
                "seed": 12,
                "interpolation_mode": "local",
            }
        )
    )
    return str(path)


def run(*argv):
    return main(list(argv))


class TestGenerate:
    def test_preset_generation(self, tree_file, tmp_path, capsys):
        out = tmp_path / "palette.json"
        code = run(
            "generate", "--input", tree_file,
            "--preset", "light,larger,bottom_up", "--output", str(out),
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["config"]["hue_fraction"] == 0.9
        assert doc["config"]["split_mode"] == "proportional"
        assert doc["config"]["interpolation_mode"] == "local"
        assert len(doc["nodes"]) == 10

    def test_config_file_generation(self, tree_file, config_file, capsys):
        assert run("generate", "--input", tree_file, "--config", config_file) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["config"]["seed"] == 12

    def test_csv_input(self, tmp_path, capsys):
        path = tmp_path / "tree.txt"
        path.write_text("r/a\nr/b")
        assert run("generate", "--input", str(path), "--format", "csv",
                   "--preset", "light,small,top_down") == 0
        assert len(json.loads(capsys.readouterr().out)["nodes"]) == 3

    def test_missing_input_is_parse_error(self, tmp_path, capsys):
        code = run("generate", "--input", str(tmp_path / "nope.json"),
                   "--preset", "light,larger,top_down")
        assert code == 2
        assert capsys.readouterr().err.startswith("E_PARSE:")

    def test_config_and_preset_conflict(self, tree_file, config_file, capsys):
        code = run("generate", "--input", tree_file,
                   "--config", config_file, "--preset", "light,larger,top_down")
        assert code == 3
        assert capsys.readouterr().err.startswith("E_CONFIG:")

    def test_neither_config_nor_preset(self, tree_file, capsys):
        assert run("generate", "--input", tree_file) == 3

    def test_unknown_config_key_named(self, tree_file, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"hue_fractionn": 0.8}')
        assert run("generate", "--input", tree_file, "--config", str(bad)) == 3
        assert "hue_fractionn" in capsys.readouterr().err

    def test_seed_env_override(self, tree_file, tmp_path, monkeypatch, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"permute": "seeded", "seed": 1}')
        monkeypatch.setenv("TREEHUE_SEED", "777")
        assert run("generate", "--input", tree_file, "--config", str(cfg)) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["config"]["seed"] == 777


class TestEvaluate:
    def test_default_scopes(self, tree_file, tmp_path, capsys):
        palette = tmp_path / "p.json"
        run("generate", "--input", tree_file, "--preset", "dark,larger,top_down",
            "--output", str(palette))
        code = run("evaluate", "--palette", str(palette), "--hierarchy", tree_file)
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert "discriminative_power" in doc
        assert "between_subtrees" in doc["discriminative_power"]
        assert doc["order_violations"] == 0

    def test_scope_selection(self, tree_file, tmp_path, capsys):
        palette = tmp_path / "p.json"
        run("generate", "--input", tree_file, "--preset", "light,larger,top_down",
            "--output", str(palette))
        code = run("evaluate", "--palette", str(palette), "--hierarchy", tree_file,
                   "--scopes", "leaves")
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert list(doc["discriminative_power"]) == ["leaves"]

    def test_coverage_mismatch(self, tree_file, tmp_path, capsys):
        other = tmp_path / "other.json"
        other.write_text('{"name":"different"}')
        palette = tmp_path / "p.json"
        run("generate", "--input", str(other), "--preset", "light,larger,top_down",
            "--output", str(palette))
        code = run("evaluate", "--palette", str(palette), "--hierarchy", tree_file)
        assert code == 4
        assert capsys.readouterr().err.startswith("E_COVERAGE:")


class TestRender:
    def test_sunburst_output(self, tree_file, tmp_path):
        palette = tmp_path / "p.json"
        svg = tmp_path / "out.svg"
        run("generate", "--input", tree_file, "--preset", "light,larger,top_down",
            "--output", str(palette))
        code = run("render", "--palette", str(palette), "--hierarchy", tree_file,
                   "--layout", "sunburst", "--out", str(svg))
        assert code == 0
        assert svg.read_text().startswith("<?xml")

    def test_pipeline_reproducible(self, tree_file, tmp_path):
        outputs = []
        for i in range(2):
            palette = tmp_path / f"p{i}.json"
            svg = tmp_path / f"s{i}.svg"
            run("generate", "--input", tree_file, "--preset", "dark,larger,bottom_up",
                "--output", str(palette))
            run("render", "--palette", str(palette), "--hierarchy", tree_file,
                "--layout", "icicle", "--out", str(svg))
            outputs.append((palette.read_bytes(), svg.read_bytes()))
        assert outputs[0] == outputs[1]


class TestCompare:
    def test_all_presets_csv(self, tree_file, tmp_path):
        out = tmp_path / "table.csv"
        code = run("compare", "--input", tree_file, "--all-presets", "--out", str(out))
        assert code == 0
        import csv as csv_mod
        rows = list(csv_mod.reader(out.read_text().splitlines()))
        assert rows[0] == ["config", "metric", "scope", "value"]
        configs = {row[0] for row in rows[1:]}
        assert len(configs) == 8

    def test_configs_directory(self, tree_file, config_file, tmp_path, capsys):
        cfg_dir = tmp_path / "configs"
        cfg_dir.mkdir()
        (cfg_dir / "one.json").write_text('{"hue_fraction": 0.8}')
        code = run("compare", "--input", tree_file, "--configs", str(cfg_dir))
        assert code == 0
        assert "config,metric,scope,value" in capsys.readouterr().out

    def test_requires_some_configs(self, tree_file, tmp_path, capsys):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert run("compare", "--input", tree_file, "--configs", str(empty)) == 3


class TestRoundTripThroughFiles:
    def test_palette_survives_serialization(self, tree_file, tmp_path):
        palette = tmp_path / "p.json"
        run("generate", "--input", tree_file, "--preset", "light,larger,top_down",
            "--output", str(palette))
        loaded = PaletteAssignment.from_json(palette.read_text())
        assert loaded.to_json() == palette.read_text()
