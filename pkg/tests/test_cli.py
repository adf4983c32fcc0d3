import json

import pytest

from rauzy.cli import Config, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConfig:
    def test_defaults(self):
        cfg = Config()
        assert cfg.node_budget == 10**7 and cfg.workers == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            Config(node_budget=0)
        with pytest.raises(ValueError):
            Config(workers=0)
        with pytest.raises(ValueError):
            Config(output="yaml")


class TestInduce:
    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "induce", "1 2 3 4 3 / 2 4 5 5 1", "0")
        assert code == 0
        assert out.strip() == "1 2 1 3 4 3 / 2 4 5 5"

    def test_self_loops(self, capsys):
        code, out, _ = run_cli(capsys, "induce", "1 2 / 2 1", "0101")
        assert code == 0
        assert out.splitlines() == ["1 2 / 2 1"] * 4

    def test_reducible_input(self, capsys):
        code, _, err = run_cli(capsys, "induce", "1 1 / 2 2", "0")
        assert code == 1
        assert "suspension" in err

    def test_undefined_move_reports_step(self, capsys):
        code, _, err = run_cli(capsys, "induce", "1 1 2 2 / 3 3", "0")
        assert code == 1
        assert "step 0" in err


class TestInvariants:
    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "--output", "json", "invariants", "1 2 3 4 / 4 3 2 1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "stratum": "H(2)",
            "genus": 2,
            "orders": [2],
            "marked": 2,
            "component": "hyperelliptic",
        }

    def test_text_report(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "1 1 / 2 2 3 3")
        assert code == 0
        assert "stratum: Q(-1,-1,-1,-1)" in out


class TestClass:
    def test_count(self, capsys):
        code, out, _ = run_cli(capsys, "class", "1 2 3 4 / 4 3 2 1", "--count")
        assert code == 0 and out.strip() == "7"

    def test_dot(self, capsys):
        code, out, _ = run_cli(capsys, "class", "1 2 / 2 1", "--dot")
        assert code == 0 and out.count("->") == 2

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "class", "1 1 2 / 2 3 3", "--json")
        payload = json.loads(out)
        assert len(payload["vertices"]) == 4

    def test_cache(self, capsys, tmp_path):
        args = ("--cache-dir", str(tmp_path), "class", "1 1 2 / 2 3 3", "--count")
        code, out, _ = run_cli(capsys, *args)
        assert code == 0 and out.strip() == "4"
        cached = list(tmp_path.iterdir())
        assert len(cached) == 1
        code, out, _ = run_cli(capsys, *args)
        assert code == 0 and out.strip() == "4"

    def test_budget_flag(self, capsys):
        code, _, err = run_cli(
            capsys, "--budget", "3", "class", "1 2 3 4 / 4 3 2 1", "--count"
        )
        assert code == 1 and "budget" in err


class TestSameClass:
    def test_fast_and_bfs_agree(self, capsys):
        for mode in ("--fast", "--bfs", "--both"):
            code, out, _ = run_cli(
                capsys,
                "same-class",
                "1 2 3 4 / 4 3 2 1",
                "1 2 3 4 / 2 4 1 3",
                mode,
            )
            assert code == 0
            assert out.strip() == "same-class"

    def test_disjoint(self, capsys):
        code, out, _ = run_cli(
            capsys, "same-class", "1 2 3 4 / 4 3 2 1", "1 2 / 2 1", "--both"
        )
        assert code == 0 and out.strip() == "different-class"


class TestVerify:
    def test_by_size(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--d", "3", "--kind", "iet")
        assert code == 0
        assert "result: pass" in out

    def test_by_stratum(self, capsys):
        code, out, _ = run_cli(
            capsys, "--output", "json", "verify", "--stratum", "H(2)"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["groups"][0]["stratum"] == "H(2)"

    def test_missing_arguments(self, capsys):
        code, _, err = run_cli(capsys, "verify")
        assert code == 1 and "need --stratum" in err


class TestEnvOverrides:
    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("RAUZY_BUDGET", "3")
        code, _, err = run_cli(capsys, "class", "1 2 3 4 / 4 3 2 1", "--count")
        assert code == 1 and "budget" in err

    def test_output_env(self, capsys, monkeypatch):
        monkeypatch.setenv("RAUZY_OUTPUT", "json")
        code, out, _ = run_cli(capsys, "invariants", "1 2 / 2 1")
        assert code == 0
        assert json.loads(out)["stratum"] == "H(0)"
