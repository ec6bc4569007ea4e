from __future__ import annotations

import json

import pytest

from mergraph import graph_from_json, max_r_robustness
from mergraph.cli import main


def run_cli(*argv):
    return main(list(argv))


@pytest.fixture()
def g9(tmp_path):
    path = tmp_path / "g9.json"
    assert run_cli("construct", "--n", "9", "--kind", "r", "--out", str(path)) == 0
    return path


class TestConstruct:
    def test_writes_graph_and_recipe(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        code = run_cli("construct", "--n", "10", "--kind", "rs", "--out", str(out), "--json")
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["edges"] == 43
        assert payload["gamma"] == 5
        g = graph_from_json(out.read_text())
        assert len(g.edges) == 43
        recipe = json.loads((tmp_path / "g.recipe.json").read_text())
        assert recipe["kind"] == "gamma_gamma"

    def test_usage_error_on_n1(self, tmp_path):
        assert run_cli("construct", "--n", "1", "--kind", "r", "--out", str(tmp_path / "x.json")) == 1

    def test_missing_flag_is_an_error(self):
        assert run_cli("construct", "--n", "9") == 1

    def test_identical_flags_identical_bytes(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        run_cli("construct", "--n", "12", "--kind", "r", "--out", str(a))
        run_cli("construct", "--n", "12", "--kind", "r", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestRobustness:
    def test_requested_level_holds(self, g9, capsys):
        assert run_cli("robustness", "--graph", str(g9), "--r", "5", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["holds"] is True

    def test_requested_level_fails_with_witness(self, g9, tmp_path, capsys):
        g = graph_from_json(g9.read_text()).remove_edge(3, 8)
        damaged = tmp_path / "damaged.json"
        from mergraph import graph_to_json

        damaged.write_text(graph_to_json(g))
        assert run_cli("robustness", "--graph", str(damaged), "--r", "5", "--json") == 2
        payload = json.loads(capsys.readouterr().out)
        assert payload["holds"] is False
        assert payload["witness"] is not None
        assert max_r_robustness(g) == 4

    def test_max_r_default(self, g9, capsys):
        assert run_cli("robustness", "--graph", str(g9), "--json") == 0
        assert json.loads(capsys.readouterr().out)["max_r"] == 5

    def test_max_s_mode(self, g9, capsys):
        assert run_cli("robustness", "--graph", str(g9), "--rs", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"r": 5, "max_s": 1}

    def test_rs_level_check(self, tmp_path, capsys):
        out = tmp_path / "gg.json"
        run_cli("construct", "--n", "10", "--kind", "rs", "--out", str(out))
        capsys.readouterr()
        assert run_cli("robustness", "--graph", str(out), "--rs", "--r", "5", "--s", "5") == 0

    def test_infeasible_size(self, tmp_path, capsys):
        out = tmp_path / "g49.json"
        run_cli("construct", "--n", "49", "--kind", "r", "--out", str(out))
        assert run_cli("robustness", "--graph", str(out), "--r", "25") == 3
        assert "infeasible" in capsys.readouterr().err

    def test_unreadable_graph(self, tmp_path):
        assert run_cli("robustness", "--graph", str(tmp_path / "nope.json")) == 1


class TestBounds:
    def test_cycle_flagged(self, tmp_path, capsys):
        path = tmp_path / "c4.txt"
        path.write_text("4\n0 1\n1 2\n2 3\n0 3\n")
        assert run_cli("bounds", "--graph", str(path), "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["implied_r_upper_bound"] == 1
        assert any("cannot be 2-robust" in flag for flag in payload["flags"])

    def test_report_for_construction(self, g9, capsys):
        assert run_cli("bounds", "--graph", str(g9)) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["implied_r_upper_bound"] == 5


class TestMinimality:
    def test_minimal_construction(self, tmp_path, capsys):
        out = tmp_path / "g7.json"
        run_cli("construct", "--n", "7", "--kind", "r", "--out", str(out))
        capsys.readouterr()
        assert run_cli("minimality", "--graph", str(out), "--kind", "r", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["minimal"] is True
        assert len(payload["entries"]) == 18

    def test_triangle_not_minimal(self, tmp_path, capsys):
        path = tmp_path / "k3.txt"
        path.write_text("3\n0 1\n1 2\n0 2\n")
        assert run_cli("minimality", "--graph", str(path), "--kind", "r", "--r", "1", "--json") == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["minimal"] is False

    def test_failing_target_is_an_error(self, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("4\n0 1\n1 2\n2 3\n0 3\n")
        assert run_cli("minimality", "--graph", str(path), "--kind", "r") == 1


class TestSimulate:
    def test_writes_all_outputs(self, g9, tmp_path, capsys):
        out = tmp_path / "traj.csv"
        code = run_cli(
            "simulate", "--graph", str(g9), "--scenario", "viiB-gamma",
            "--seed", "1", "--out", str(out), "--json",
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["converged"] is True
        csv_text = out.read_text()
        assert csv_text.startswith("t,node_0")
        assert len(csv_text.splitlines()) == 32
        roles = json.loads((tmp_path / "traj.roles.json").read_text())
        assert roles == {"roles": ["byzantine", "byzantine"] + ["normal"] * 7, "F": 2}
        metrics = json.loads((tmp_path / "traj.metrics.json").read_text())
        assert metrics["scenario"] == "viiB-gamma"
        assert metrics["within_hull"] is True

    def test_default_removal_edge(self, g9, tmp_path, capsys):
        out = tmp_path / "traj.csv"
        code = run_cli(
            "simulate", "--graph", str(g9), "--scenario", "viiB-gamma",
            "--seed", "1", "--remove-edge", "default", "--out", str(out), "--json",
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["converged"] is False
        metrics = json.loads((tmp_path / "traj.metrics.json").read_text())
        assert metrics["removed_edge"] == [3, 8]
        assert metrics["spread_final"] > 10

    def test_absent_edge_rejected(self, g9, tmp_path):
        assert run_cli(
            "simulate", "--graph", str(g9), "--scenario", "viiB-gamma",
            "--remove-edge", "6,7", "--out", str(tmp_path / "x.csv"),
        ) == 1

    def test_bad_removal_syntax(self, g9, tmp_path):
        assert run_cli(
            "simulate", "--graph", str(g9), "--scenario", "viiB-gamma",
            "--remove-edge", "abc", "--out", str(tmp_path / "x.csv"),
        ) == 1

    def test_trig_scenario_requires_f(self, g9, tmp_path):
        assert run_cli(
            "simulate", "--graph", str(g9), "--scenario", "viiA-malicious",
            "--out", str(tmp_path / "x.csv"),
        ) == 1

    def test_large_malicious_run_converges(self, tmp_path, capsys):
        graph_path = tmp_path / "g49.json"
        run_cli("construct", "--n", "49", "--kind", "r", "--out", str(graph_path))
        capsys.readouterr()
        out = tmp_path / "big.csv"
        code = run_cli(
            "simulate", "--graph", str(graph_path), "--scenario", "viiA-malicious",
            "--f", "12", "--seed", "0", "--out", str(out), "--json",
        )
        assert code == 0
        assert json.loads(capsys.readouterr().out)["converged"] is True

    def test_reproducible_bytes(self, g9, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for out in (a, b):
            run_cli(
                "simulate", "--graph", str(g9), "--scenario", "viiB-gammagamma",
                "--seed", "9", "--out", str(out),
            )
        assert a.read_bytes() == b.read_bytes()
        assert (tmp_path / "a.metrics.json").read_bytes() == (tmp_path / "b.metrics.json").read_bytes()
