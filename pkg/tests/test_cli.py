import json

import pytest

from eislat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_reduce_rho(capsys):
    code, out = run(capsys, "reduce-null", "0,0,0,0,1")
    assert code == 0
    assert out["certificate"]["word"] == []
    assert out["verified"]


def test_reduce_reachable(capsys):
    # a word image of rho
    from eislat.gamma import gen_word
    from eislat.hermitian import RHO

    v = gen_word((3, 1), (1, 2), (4, 5)).apply(RHO.coords)
    text = ",".join(f"{x.a}+{x.b}w" if x.b >= 0 else f"{x.a}{x.b}w" for x in v)
    code, out = run(capsys, "reduce-null", text, "--to-rho")
    assert code == 0 and out["verified"]


def test_reduce_non_null(capsys):
    code, out = run(capsys, "reduce-null", "1,0,0,0,1")
    assert code == 1
    assert "not null" in out["error"]


def test_reduce_bad_syntax(capsys):
    code, out = run(capsys, "reduce-null", "1,2")
    assert code == 1


@pytest.mark.parametrize(
    "vec,name,roots",
    [("3,1,1,1,1", "diagonal point", 0), ("2-wb,1,1,1,1", "Fermat point", 0), ("1,0,0,0,0", None, 24)],
)
def test_classify(capsys, vec, name, roots):
    code, out = run(capsys, "classify", vec)
    assert code == 0
    assert out["identification"] == name
    assert out["orthogonal_short_roots"] == roots


def test_classify_nonnegative(capsys):
    code, out = run(capsys, "classify", "0,1,0,0,0")
    assert code == 1


def test_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_relations(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out = run(capsys, "verify", "relations", "--json", str(path))
    assert code == 0
    assert out["schema"] == "eislat.report/1"
    assert json.loads(path.read_text()) == out


def test_verify_is_deterministic(capsys):
    _, a = run(capsys, "verify", "--suite", "milnor", "--seed", "3")
    _, b = run(capsys, "verify", "--suite", "milnor", "--seed", "3")
    assert a == b
