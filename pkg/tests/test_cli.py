import json

import pytest

from tesserae.cli import main, render_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


class TestCommands:
    def test_count_t_tetromino_width6(self, capsys):
        report = run_json(capsys, "count", "--tiles", "tetromino-T", "--width", "6", "--length", "8")
        assert report["count"] == "0"

    def test_series_contains_big_term(self, capsys):
        report = run_json(
            capsys, "series", "--tiles", "tromino-right", "--width", "4", "--length", "30"
        )
        assert "26579488" in report["series"]
        assert report["series"][0] == "1"

    def test_gf_t_tetromino(self, capsys):
        report = run_json(capsys, "gf", "--tiles", "tetromino-T", "--width", "4")
        assert report["num"] == [1, -1]
        assert report["den"] == [1, -3]
        assert report["step"] == 4

    def test_faultfree_terms(self, capsys):
        report = run_json(
            capsys, "faultfree", "--tiles", "tromino-right", "--width", "4", "--length", "6"
        )
        assert report["terms"] == ["0", "4", "2", "8", "48", "288", "1728"]

    def test_entropy_report_fields(self, capsys):
        report = run_json(capsys, "entropy", "--tiles", "tromino-right", "--width", "5")
        assert report["sites_per_step"] == 15
        assert abs(report["lambda"] - 12.36366722456) < 1e-9
        assert abs(report["sigma_lower"] - 0.1676508) < 1e-6
        assert abs(report["sigma_upper"] - 0.462098120373) < 1e-9

    def test_upper(self, capsys):
        report = run_json(capsys, "upper", "--tiles", "tetromino-L")
        assert abs(report["sigma_upper"] - 0.519860385420) < 1e-9

    def test_ising_bound_default(self, capsys):
        report = run_json(capsys, "ising-bound")
        assert abs(report["sigma_lower"] - 0.09501088358) < 1e-9
        assert report["grid"] == 1024

    def test_ising_bound_beta_expression(self, capsys):
        report = run_json(capsys, "ising-bound", "--beta", "ln2/2", "--grid", "256")
        assert abs(report["sigma_ising"] - 0.8270269567) < 1e-8

    def test_ising_bound_generic_beta(self, capsys):
        report = run_json(capsys, "ising-bound", "--beta", "0.2", "--grid", "256")
        assert report["sigma_lower"] is None
        assert report["sigma_ising"] > 0

    def test_fylfot(self, capsys):
        report = run_json(capsys, "fylfot", "--width", "2", "--length", "2")
        assert report["sum"] == "82"

    def test_oracle(self, capsys):
        report = run_json(capsys, "oracle", "--tiles", "tromino-right", "--width", "4", "--length", "6")
        assert report["count"] == "18"

    def test_automaton_dot_text(self, capsys):
        code, out, _ = run(capsys, "automaton-dot", "--tiles", "domino", "--width", "1")
        assert code == 0
        assert out.startswith("digraph")
        assert "s0 -> s1" in out

    def test_count_text_output(self, capsys):
        code, out, _ = run(capsys, "count", "--tiles", "domino", "--width", "2", "--length", "4")
        assert code == 0
        assert "count: 5" in out


class TestTileFiles:
    def test_tile_file_path(self, capsys, tmp_path):
        path = tmp_path / "ell.tiles"
        path.write_text("@symmetry: all\n#.\n#.\n##\n")
        report = run_json(capsys, "gf", "--tiles", str(path), "--width", "4")
        assert report["den"] == [1, -4, -2, 1, 4, 4, 2]

    def test_bad_tile_file(self, capsys, tmp_path):
        path = tmp_path / "bad.tiles"
        path.write_text("#?\n")
        code, _, err = run(capsys, "count", "--tiles", str(path), "--width", "2", "--length", "2")
        assert code == 2
        assert "tile" in err.lower()


class TestExitCodes:
    def test_usage_missing_command(self, capsys):
        assert run(capsys, )[0] == 1

    def test_usage_missing_flag(self, capsys):
        assert run(capsys, "count", "--tiles", "domino", "--width", "2")[0] == 1

    def test_usage_bad_width(self, capsys):
        assert run(capsys, "count", "--tiles", "domino", "--width", "0", "--length", "2")[0] == 1

    def test_unknown_tiles(self, capsys):
        assert run(capsys, "count", "--tiles", "heptomino", "--width", "2", "--length", "2")[0] == 2

    def test_no_variant_fits(self, capsys):
        assert run(capsys, "count", "--tiles", "tetromino-T", "--width", "1", "--length", "4")[0] == 2

    def test_no_tilings_exit3(self, capsys):
        # T tetromino variants fit in width 2 but never complete a rectangle
        assert run(capsys, "gf", "--tiles", "tetromino-T", "--width", "2")[0] == 3
        assert run(capsys, "entropy", "--tiles", "tetromino-T", "--width", "2")[0] == 3

    def test_oracle_cap_env(self, capsys, monkeypatch):
        monkeypatch.setenv("TESSERAE_MAX_CELLS", "10")
        assert run(capsys, "oracle", "--tiles", "domino", "--width", "4", "--length", "4")[0] == 1
        monkeypatch.setenv("TESSERAE_MAX_CELLS", "64")
        assert run(capsys, "oracle", "--tiles", "domino", "--width", "4", "--length", "4")[0] == 0

    def test_bad_beta(self, capsys):
        assert run(capsys, "ising-bound", "--beta", "two")[0] == 1

    def test_beta_past_criticality(self, capsys):
        assert run(capsys, "ising-bound", "--beta", "0.9")[0] == 1


class TestJsonRoundTrip:
    @pytest.mark.parametrize(
        "argv",
        [
            ("count", "--tiles", "domino", "--width", "2", "--length", "6"),
            ("series", "--tiles", "tetromino-T", "--width", "4", "--length", "12"),
            ("gf", "--tiles", "tromino-right", "--width", "4"),
            ("entropy", "--tiles", "tetromino-L", "--width", "4"),
            ("ising-bound",),
            ("fylfot", "--width", "3", "--length", "3"),
        ],
    )
    def test_parse_and_reserialize_is_identical(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--json")
        assert code == 0
        assert render_json(json.loads(out)) == out
