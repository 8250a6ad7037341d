import json

import pytest

from selfsim_lie.cli import run


def out_of(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_equal(capsys):
    code, out, _ = out_of(capsys, ["equal", "[t,m]", "c"])
    assert code == 0 and out.strip() == "equal"
    code, out, _ = out_of(capsys, ["equal", "t m", "m t"])
    assert code == 1 and out.strip() == "different"


def test_eval_and_portrait(capsys):
    code, out, _ = out_of(capsys, ["eval", "t", "--depth", "3"])
    data = json.loads(out)
    assert code == 0 and data["labels"]["11"] == 1 and data["depth"] == 3
    code, out, _ = out_of(capsys, ["portrait", "D(c)", "--depth", "2"])
    data = json.loads(out)
    assert data["labels"] == {"": 0, "0": 1, "1": 0} and data["i"] == 0


@pytest.mark.parametrize(
    "argv",
    [["eval", "t^0"], ["portrait", "D(t)"], ["bogus"], ["eval", "[t"], ["quotient", "--level", "9"], ["eval", "t", "--depth", "0"]],
)
def test_errors_exit_two(capsys, argv):
    code, out, err = out_of(capsys, argv)
    assert code == 2 and err and not out


def test_level_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SELFSIM_LIE_MAX_LEVEL", "3")
    code, _, err = out_of(capsys, ["quotient", "--level", "4"])
    assert code == 2 and "SELFSIM_LIE_MAX_LEVEL" in err
    code, out, _ = out_of(capsys, ["quotient", "--level", "3"])
    assert code == 0 and json.loads(out)["log2orders"][0] == 4


def test_quotient(capsys):
    code, out, _ = out_of(capsys, ["quotient", "--level", "7", "--max-n", "8"])
    data = json.loads(out)
    assert code == 0 and data["l"][:4] == [2, 3, 1, 4] and data["level"] == 7


def test_series(capsys):
    code, out, _ = out_of(capsys, ["series", "--terms", "10"])
    assert json.loads(out)["dims"] == [1, 2, 4, 7, 12, 19, 30, 45, 67, 97, 139]
    code, out, _ = out_of(capsys, ["series", "--terms", "6", "--from-quotient", "7"])
    assert json.loads(out)["dims"] == [1, 2, 4, 7, 12, 19, 30]


def test_liegraph(capsys, tmp_path):
    path = tmp_path / "fig1.dot"
    code, out, _ = out_of(capsys, ["liegraph", "--max-degree", "10", "--dot", str(path)])
    assert code == 0 and out == ""
    text = path.read_text(encoding="utf-8")
    run(["liegraph", "--max-degree", "10", "--dot", str(tmp_path / "again.dot")])
    assert (tmp_path / "again.dot").read_text(encoding="utf-8") == text
    assert '"ND(c)" -> "DN(c)" [label="τ"];' in text


def test_outputs_deterministic(capsys):
    a = out_of(capsys, ["portrait", "N(D(c))^2 t", "--depth", "3"])
    b = out_of(capsys, ["portrait", "N(D(c))^2 t", "--depth", "3"])
    assert a == b


def test_verify_subset(capsys):
    code, out, _ = out_of(capsys, ["verify", "--only", "3", "5"])
    assert code == 0
    assert out.count("[PASS]") == 2 and "2/2 criteria passed" in out
