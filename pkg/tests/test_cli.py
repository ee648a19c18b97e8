import subprocess
import sys

import pytest

from dlpa.cli import main
from dlpa import programs as P


@pytest.fixture
def run(tmp_path, capsys):
    def _run(*args, files=None):
        paths = []
        for name, text in (files or {}).items():
            path = tmp_path / name
            path.write_text(text)
            paths.append(str(path))
        argv = [a.replace("@", str(tmp_path) + "/") for a in args] + paths
        code = main(argv)
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def test_p5_prints_optimum_and_cost(run):
    code, out, _ = run(files={"p5.lp": P.P5})
    assert code == 0
    assert out == "{a, c, d}\nCOST level=1 weight=3 level=2 weight=0\n"


def test_p2_lists_both_answer_sets(run):
    code, out, _ = run(files={"p2.lp": P.P2})
    assert (code, out) == (0, "{b}\n{c}\n")


def test_limit(run):
    code, out, _ = run("-n=1", files={"p2.lp": P.P2})
    assert out == "{b}\n"
    code, out, _ = run("-n", "1", files={"p2.lp": P.P2})
    assert out == "{b}\n"


def test_no_answer_set_exit_status(run):
    code, out, _ = run(files={"x.lp": "a. :- a."})
    assert (code, out) == (1, "")


def test_syntax_error(run):
    code, out, err = run(files={"bad.lp": "a :- b\nc."})
    assert code == 2 and out == ""
    assert "bad.lp:2:1" in err and err.startswith("error: syntax:")


def test_error_location_in_second_file(run):
    code, _, err = run(files={"a.lp": "a.\nb.\n", "b.lp": "c.\nd :- \n"})
    assert code == 2 and "b.lp:" in err


def test_unstratified_is_rejected(run):
    code, _, err = run(files={"u.lp": P.UNSTRATIFIED})
    assert code == 2 and "aggregate-unstratified" in err


def test_unsafe_is_rejected(run):
    code, _, err = run(files={"s.lp": P.SAFETY})
    assert code == 2 and err.startswith("error: unsafe: ")
    assert "s.lp:2:" in err and "s.lp:3:" in err


def test_tagged_diagnostics(run):
    code, _, err = run("--diagnostics=tagged", files={"bad.lp": "a :- b\nc."})
    fields = err.strip().split("\t")
    assert code == 2 and fields[:2] == ["error", "syntax"] and fields[3:5] == ["2", "1"]


def test_filter(run):
    code, out, _ = run("--filter=depot", files={"ff.lp": P.FASTFOOD,
                                                "i.lp": P.fastfood_instance([1, 3, 6, 10], k=2)})
    assert out == "{depot(r2,3), depot(r4,10)}\nCOST level=1 weight=5\n"


def test_files_are_concatenated_in_order(run):
    code, out, _ = run(files={"enc.lp": "q(X) :- p(X).", "facts.lp": "p(1). p(2)."})
    assert out == "{p(1), p(2), q(1), q(2)}\n"


def test_ground_only(run):
    code, out, _ = run("--ground-only", files={"p1.lp": "p(1) v p(2). q(X) :- p(X)."})
    assert code == 0
    assert "q(1) :- p(1)." in out and "p(1) v p(2)." in out


def test_oracle_mode_matches_solver(run):
    files = {"p5.lp": P.P5}
    assert run("--oracle", files=files)[1] == run(files=files)[1]
    files = {"p4.lp": P.P4}
    assert run("--oracle", files=files)[1] == run(files=files)[1] == "{b, d(1)}\n"


def test_check_mode(run, tmp_path):
    (tmp_path / "good.txt").write_text("b\nd(1)\n")
    (tmp_path / "bad.txt").write_text("a\nd(1)\n")
    code, out, _ = run("--check=@good.txt", files={"p4.lp": P.P4})
    assert (code, out) == (0, "ANSWER SET\n")
    code, out, _ = run("--check", "@bad.txt", files={"p4.lp": P.P4})
    assert code == 1 and out.startswith("NOT AN ANSWER SET\nwitness: ")


def test_check_reports_violated_rule(run, tmp_path):
    (tmp_path / "i.txt").write_text("a\n")
    code, out, _ = run("--check=@i.txt", files={"p2.lp": P.P2})
    assert code == 1 and "violated rule :- a." in out


def test_check_with_aggregates_and_aux(run, tmp_path):
    text = P.TEAM_BUILDING + P.team_building_instance(
        [(1, "f", "sk1", 1), (2, "m", "sk2", 1)], 1, 1, 5, 2, 1)
    code, out, _ = run(files={"t.lp": text})
    assert code == 0
    first = out.splitlines()[0].strip("{}").split(", ")
    (tmp_path / "i.txt").write_text("\n".join(first) + "\n")
    assert run("--check=@i.txt", files={"t.lp": text})[:2] == (0, "ANSWER SET\n")


def test_stats_go_to_stderr(run):
    code, out, err = run("--stats", files={"p2.lp": P.P2})
    assert out == "{b}\n{c}\n"
    assert err.startswith("% stats: ") and "rules=" in err


def test_no_dedup_changes_only_stats(run):
    text = "d(1,a) v e. d(7,b) v e.\n" + " ".join(f"p({i}) v f." for i in range(3)) + \
        "\n:- p(T), 10 <= #max{V: d(V,X)}.\n:- p(T), #min{Y: d(Y,Z)} <= 5.\n"
    on = run("--stats", files={"x.lp": text})
    off = run("--stats", "--no-dedup", files={"x.lp": text})
    assert on[:2] == off[:2]
    assert "sets_after_dedup=1" in on[2] and "sets_after_dedup=1" not in off[2]


def test_bad_flag_values(run):
    assert run("-n=-1", files={"p2.lp": P.P2})[0] == 2
    assert run("--maxint=0", files={"p2.lp": P.P2})[0] == 2
    assert run("--oracle", "--ground-only", files={"p2.lp": P.P2})[0] == 2


def test_missing_file(run):
    code, _, err = run("/nonexistent/file.lp")
    assert code == 2 and err.startswith("error: io")


def test_maxint_bounds_arithmetic(run):
    text = "n(1). n(2). n(3).\ns(Z) :- n(X), n(Y), Z = X + Y.\n"
    assert run("--maxint=4", files={"a.lp": text})[1] == "{n(1), n(2), n(3), s(2), s(3), s(4)}\n"


def test_output_is_deterministic(tmp_path):
    path = tmp_path / "s.lp"
    path.write_text(P.SEATING + P.seating_instance(3, 2, 2, like=[(1, 2)]))
    cmd = [sys.executable, "-m", "dlpa.cli", str(path)]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first.count("\n") > 1
