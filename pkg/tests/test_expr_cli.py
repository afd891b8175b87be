import io
import json
import subprocess
import sys

import pytest

from symtower.cli import required_bound, run
from symtower.expr import ExprError, Node, evaluate, geometric_dim, is_inclusion, parse, unparse
from symtower.sset import write_pss_json, sphere, wedge


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


@pytest.mark.parametrize(
    "text, kind, dim",
    [
        ("sym(2, sphere(1))", "sym", 2),
        ("wedge_left(sphere(1), sphere(2))", "wedge_left", 2),
        ("point", "point", 0),
        ("susp(smash(sphere(1), sphere(1)))", "susp", 3),
        ("cone_incl(wedge(sphere(0), point))", "cone_incl", 1),
    ],
)
def test_parse_examples(text, kind, dim):
    node = parse(text)
    assert isinstance(node, Node) and node.kind == kind
    assert geometric_dim(node) == dim
    assert parse(unparse(node)) == node


def test_inclusion_kinds():
    assert is_inclusion(parse("wedge_left(sphere(1), sphere(2))"))
    assert is_inclusion(parse("base(point)"))
    assert not is_inclusion(parse("sym(2, sphere(1))"))


@pytest.mark.parametrize(
    "text, col, fragment",
    [
        ("sym(-1, point)", 5, "negative n"),
        ("sphere(1", 9, "expected ',' or ')'"),
        ("spheer(1)", 1, "unknown constructor"),
        ("wedge(sphere(1))", 1, "expects 2 argument"),
        ("sym(2, base(point))", 8, "expects a space"),
        ("sphere(1) x", 11, "unexpected"),
        ("sphere(#)", 8, "unexpected character"),
    ],
)
def test_parse_errors(text, col, fragment):
    with pytest.raises(ExprError) as info:
        parse(text)
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"column {col}:")
    assert info.value.pos == col - 1


def test_evaluate_matches_builders():
    X = evaluate(parse("wedge(sphere(1), sphere(1))"), 3)
    Y = wedge(sphere(1, 3), sphere(1, 3))
    assert [X.size(m) for m in range(4)] == [Y.size(m) for m in range(4)]


def test_required_bounds():
    assert required_bound("dim", 2, 0, 3) == 3
    assert required_bound("order", 2, 0, 3) == 7
    assert required_bound("order+1", 1, 0, 3) == 7
    assert required_bound("n", 1, 3, 3) == 4
    assert required_bound("n", 0, 3, 3) == 1


def test_homology_example():
    code, out = call("homology", "sym(2, sphere(1))", "--max-dim", "3")
    assert code == 0 and out.strip() == "H̃_* = 0"
    code, out = call("homology", "sym(2, sphere(2))")
    assert code == 0 and out.strip() == "H̃_4 = Z"


def test_chain_counterexample():
    code, out = call("chain-counterexample")
    assert code == 0
    assert "H_{-2} = Z/2" in out.splitlines()


def test_macdonald_example():
    code, out = call("verify-macdonald", "sphere(2)", "--order", "3", "--max-dim", "7")
    assert code == 0 and "PASS" in out
    code, out = call("verify-macdonald", "sphere(2)", "--order", "3", "--json")
    report = json.loads(out)
    assert report["passed"] and report["results"][0]["lhs"] == [1, 1, 1, 1]
    assert report["results"][0]["max_dim"] == 7


def test_usage_errors(capsys):
    assert call("homology", "sym(2, sphere(2))", "--max-dim", "3")[0] == 2
    assert "need at least 5" in capsys.readouterr().err
    assert call("homology", "sym(-1, point)")[0] == 2
    err = capsys.readouterr().err
    assert "negative n" in err and "^" in err
    assert call("tower", "sphere(1)")[0] == 2
    assert call("homology", "base(point)")[0] == 2
    assert call("homology")[0] == 2
    assert call("verify-adjunction", "point")[0] == 2
    assert call("no-such-command")[0] == 2


def test_json_is_deterministic():
    argv = ["tower", "wedge_left(sphere(0), sphere(0))", "--n", "3", "--json"]
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == 0
    report = json.loads(a[1])
    assert report["schema"] == "symtower.report/1"
    assert list(report) == ["schema", "command", "results", "passed"]


def test_multiple_expressions():
    code, out = call("euler", "sphere(1)", "sphere(2)", "point")
    assert code == 0
    assert out.count("chi~ = ") == 3


def test_load_roundtrip(tmp_path):
    X = wedge(sphere(1, 3), sphere(2, 3))
    path = tmp_path / "x.json"
    write_pss_json(X, path)
    code, out = call("homology", f'load("{path}")')
    assert code == 0 and out.splitlines() == ["H̃_1 = Z", "H̃_2 = Z"]
    # stored levels do not cover Sym^2
    assert call("homology", f'sym(2, load("{path}"))')[0] == 2
    assert call("homology", 'load("/nonexistent/file.json")')[0] == 2


def test_failure_exit_code(monkeypatch):
    import symtower.cli as cli

    monkeypatch.setattr(cli, "euler_from_homology", lambda X: 99)
    assert call("euler", "sphere(1)")[0] == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symtower", "euler", "sphere(1)"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "chi~ = -1 (simplex count), -1 (homology)"


def test_kunneth_command_covers_all_heights():
    code, out = call("verify-kunneth", "wedge_left(sphere(0), sphere(0))", "--n", "4")
    lines = out.splitlines()
    assert code == 0
    assert "n=2: level-0 stage sizes [1, 3, 4] plain, [1, 2, 3] symmetrized" in lines
    assert sum(line.startswith("PASS ") for line in lines) == 2 * (1 + 2 + 3 + 4)
