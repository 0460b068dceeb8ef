import json
import subprocess
import sys

import pytest

from treecolor.cli import main

T_R = "((()()()))"
PERFECT_2 = "((()())(()()))"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestParseCommand:
    def test_parse(self, capsys):
        code, doc = run_json(capsys, "parse", "--tree", T_R)
        assert code == 0
        assert doc["n"] == 5 and doc["height"] == 2
        assert doc["serialized"] == T_R

    def test_malformed_tree_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "parse", "--tree", "((")
        assert code == 2
        assert json.loads(out)["offset"] == 2
        assert "offset" in err

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "tree.txt"
        path.write_text(PERFECT_2)
        code, doc = run_json(capsys, "parse", "--file", str(path))
        assert code == 0 and doc["n"] == 7

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["parse", "--tree", "()", "--bogus"])
        assert err.value.code == 2


class TestProfileCommand:
    def test_profiles(self, capsys):
        code, doc = run_json(capsys, "profile", "--tree", "((()())((()))())")
        assert code == 0
        assert doc["by_depth"] == [1, 3, 3, 1]
        assert doc["by_height"] == [4, 2, 1, 1]


class TestColorCommand:
    def test_height_canonical(self, capsys):
        code, doc = run_json(
            capsys, "color", "--canonical", "height", "--tree", PERFECT_2
        )
        assert code == 0
        assert doc["partition"] == [4, 2, 1]
        assert doc["min_colors"] == 3

    def test_dot_and_figure_outputs(self, capsys, tmp_path):
        dot = tmp_path / "tree.gv"
        fig = tmp_path / "tree.png"
        code, _ = run_json(
            capsys,
            "color",
            "--canonical",
            "depth",
            "--tree",
            PERFECT_2,
            "--dot",
            str(dot),
            "--figure",
            str(fig),
        )
        assert code == 0
        assert dot.read_text().startswith("digraph")
        assert fig.stat().st_size > 0


class TestVerifyCommand:
    def test_valid(self, capsys):
        code, doc = run_json(
            capsys, "verify", "--tree", T_R, "--coloring", "1,2,3,3,3"
        )
        assert code == 0 and doc["valid"]

    def test_invalid_exits_1(self, capsys):
        code, doc = run_json(
            capsys, "verify", "--tree", T_R, "--coloring", "1,1,2,2,2"
        )
        assert code == 1
        assert doc["valid"] is False
        assert doc["violation"] == {"ancestor": 0, "node": 1}

    def test_coloring_file(self, capsys, tmp_path):
        path = tmp_path / "colors.json"
        path.write_text("[1, 2, 3, 3, 3]")
        code, doc = run_json(
            capsys, "verify", "--tree", T_R, "--coloring-file", str(path)
        )
        assert code == 0 and doc["valid"]

    def test_size_mismatch_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--tree", T_R, "--coloring", "1,2")
        assert code == 2 and "mismatch" in err


class TestCheckCommand:
    def test_passing(self, capsys):
        code, doc = run_json(capsys, "check", "--tree", T_R, "--partition", "3,1,1")
        assert code == 0 and doc["passed"]

    def test_gap_partition_fails_refinement(self, capsys):
        code, doc = run_json(capsys, "check", "--tree", T_R, "--partition", "2,2,1")
        assert code == 1
        assert doc["necessary"]["passed"] is True
        assert doc["unique_path"]["passed"] is False
        failure = doc["unique_path"]["failures"][0]
        assert failure["condition"] == "unique_path"


class TestSolveCommand:
    def test_not_colorable_exits_1(self, capsys):
        code, doc = run_json(capsys, "solve", "--tree", T_R, "--partition", "2,2,1")
        assert code == 1
        assert doc["status"] == "not_colorable"

    def test_colorable(self, capsys):
        code, doc = run_json(
            capsys, "solve", "--tree", PERFECT_2, "--partition", "3,3,1"
        )
        assert code == 0
        assert doc["status"] == "colorable"
        assert sorted(doc["witness"]) == [1, 1, 1, 2, 2, 2, 3]

    def test_budget_flag_exits_3(self, capsys):
        code, doc = run_json(
            capsys,
            "solve",
            "--tree",
            PERFECT_2,
            "--partition",
            "3,3,1",
            "--budget",
            "0",
        )
        assert code == 3
        assert doc["status"] == "budget_exceeded"

    def test_budget_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("TREECOLOR_BUDGET", "0")
        code, doc = run_json(
            capsys, "solve", "--tree", PERFECT_2, "--partition", "3,3,1"
        )
        assert code == 3 and doc["status"] == "budget_exceeded"

    def test_bad_partition_sum_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "solve", "--tree", T_R, "--partition", "9,1")
        assert code == 2


class TestPartitionsCommand:
    def test_chi_filter(self, capsys):
        code, doc = run_json(
            capsys, "partitions", "--tree", PERFECT_2, "--colors", "chi"
        )
        assert code == 0
        assert doc["partitions"] == [[4, 2, 1], [3, 3, 1]]

    def test_unfiltered_count(self, capsys):
        code, doc = run_json(capsys, "partitions", "--tree", T_R)
        assert code == 0
        assert doc["count"] == len(doc["partitions"])


class TestOptimizeCommand:
    def test_min_max(self, capsys):
        code, doc = run_json(
            capsys,
            "optimize",
            "--tree",
            PERFECT_2,
            "--objective",
            "max",
            "--colors",
            "chi",
        )
        assert code == 0
        assert doc["partition"] == [3, 3, 1] and doc["value"] == 3

    def test_moment(self, capsys):
        code, doc = run_json(
            capsys, "optimize", "--tree", PERFECT_2, "--objective", "moment:2"
        )
        assert code == 0 and doc["value"] == 19

    def test_cost_file(self, capsys, tmp_path):
        table = tmp_path / "cost.json"
        table.write_text(json.dumps({str(k): float(k * k) for k in range(1, 8)}))
        code, doc = run_json(
            capsys,
            "optimize",
            "--tree",
            PERFECT_2,
            "--objective",
            f"cost:{table}",
        )
        assert code == 0 and doc["value"] == 19

    def test_greedy(self, capsys):
        code, doc = run_json(
            capsys, "optimize", "--tree", T_R, "--colors", "3", "--greedy"
        )
        assert code == 0
        assert doc["exact"] is False
        assert doc["partition"] == [3, 1, 1]

    def test_unknown_objective_exits_2(self, capsys):
        code, _, _ = run_cli(
            capsys, "optimize", "--tree", T_R, "--objective", "median"
        )
        assert code == 2


class TestCensusCommands:
    def test_tnsc_jsonl(self, capsys):
        code, out, _ = run_cli(capsys, "tnsc", "--class", "rooted", "--nmax", "5")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        records = [l for l in lines if l["type"] == "record"]
        assert len(records) == 1
        assert records[0]["tree"] == T_R
        assert records[0]["failing"] == [[2, 2, 1]]

    def test_tnsc_figures(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys,
            "tnsc",
            "--class",
            "rooted",
            "--nmax",
            "5",
            "--figures",
            str(tmp_path),
        )
        assert code == 0
        assert list(tmp_path.glob("*.png"))
        assert "figure" in err

    def test_conjecture(self, capsys):
        code, doc = run_json(capsys, "conjecture", "--hmax", "2")
        assert code == 0
        assert doc["counterexample_count"] == 0

    def test_conjecture_budget_exits_3(self, capsys):
        code, _ = run_json(capsys, "conjecture", "--hmax", "2", "--budget", "2")
        assert code == 3

    def test_catalan(self, capsys):
        code, doc = run_json(capsys, "catalan", "--nmax", "5")
        assert code == 0
        assert doc["all_match"] is True


class TestSubprocessEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "treecolor", "solve", "--tree", T_R, "--partition", "2,2,1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
        assert json.loads(proc.stdout)["status"] == "not_colorable"

    def test_stdout_stays_clean_json(self):
        proc = subprocess.run(
            [sys.executable, "-m", "treecolor", "parse", "--tree", "(("],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
        json.loads(proc.stdout)  # single parseable document
        assert proc.stderr.strip()
