import json

import pytest

from jacobson.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize("argv,expected", [
    (["normalize", "--field", "q", "--pres", "jacobson", "X*Y"], "1"),
    (["normalize", "c'*d"], "0"),
    (["normalize", "c*c' + d*d'"], "v"),
    (["multiply", "c'", "c"], "v"),
])
def test_normalize(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.splitlines()[0] == expected


def test_divide(capsys):
    code, out, _ = run(capsys, "divide", "c^2*c'", "--f", "x-1")
    assert code == 0 and out == "q = 1 + c - c^2*c'\nr = 1"
    code, out, _ = run(capsys, "divide", "c", "--f", "x-1", "--n", "2")
    assert out.splitlines()[:2] == ["g_0 = 1", "g_1 = 1"]


def test_json_output_round_trips(capsys):
    from jacobson.jsonio import element_from_json
    from jacobson.expr import parse
    from jacobson.arith import QQ
    code, out, _ = run(capsys, "normalize", "--json", "2*c*d*d'*c' - w")
    assert element_from_json(json.loads(out)) == parse("2*c*d*d'*c' - w", QQ)


def test_actions(capsys):
    assert run(capsys, "act", "--module", "rw", "c'", "c^2*d")[1] == "c*d"
    code, out, _ = run(capsys, "act", "--module", "vf", "--f", "x^2+x-1", "c", "x")
    assert code == 0 and "xbar" in out
    assert run(capsys, "solve-rw", "--p", "x-1", "--b", "d")[1] == "NoSolution"
    assert run(capsys, "solve-rw", "--p", "x", "--b", "c*d")[1] == "x = d\nkernel_dim = 1"


def test_prufer_commands(capsys):
    assert run(capsys, "prufer", "solve", "--f", "x^2+x-1", "--n", "3", "c^2+c-1", "1")[1] == "NoSolution"
    code, out, _ = run(capsys, "prufer", "extend", "--f", "x-1", "--p", "x-2", "1")
    assert code == 0 and out.endswith("True")
    code, out, _ = run(capsys, "prufer", "act", "--f", "x-1", "--n", "2", "c", "1")
    assert out == "(1) + (1)*f(c) + R f(c)^2"


def test_y_commands(capsys):
    assert run(capsys, "y", "act", "d'*c'^2", "--w", "1", "--num", "1", "--den", "1-x")[1] == "w"
    code, out, _ = run(capsys, "y", "solve", "--p", "1-x", "--poly", "1", "--json")
    data = json.loads(out)
    assert data["den"] == ["-1", "1"] and data["num"] == ["-1"]
    assert run(capsys, "y", "witness", "--num", "x^2", "--den", "1-x")[1].startswith("r = d'*c'^2")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify-ideal", "c-1", "--json")
    data = json.loads(out)
    assert data["case"] == "contains_socle" and data["status"] == "decided"
    assert "inside_socle" in run(capsys, "classify-ideal", "w")[1]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "normalize", "c*+")
    assert code == 2 and "position" in err
    assert run(capsys, "normalize", "--field", "fp:8", "c")[0] == 2
    assert run(capsys, "divide", "c", "--f", "x+1")[0] == 2
    assert run(capsys, "y", "witness")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense"])
    assert info.value.code == 2


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "relations")
    assert code == 0 and out.splitlines()[-1].startswith("PASS")


def test_deterministic(capsys):
    a = run(capsys, "verify", "socle", "--seed", "7", "--size", "50", "--json")[1]
    b = run(capsys, "verify", "socle", "--seed", "7", "--size", "50", "--json")[1]
    strip = lambda s: {k: v for k, v in json.loads(s)["total"].items() if k != "wall_time"}
    assert strip(a) == strip(b)
