import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from barytop.cli.build import RunConfig
from barytop.cli.main import main
from barytop.cli.parser import SIGNATURES, ParseError, SpaceExpr, parse, pretty


# -- parser ------------------------------------------------------------------

def test_parse_examples():
    assert parse("bary(2, S(1))") == SpaceExpr("bary", (2, SpaceExpr("S", (1,))))
    e = parse("rsp(3, susp(torus))")
    assert e == SpaceExpr("rsp", (3, SpaceExpr("susp", (SpaceExpr("torus"),))))
    assert e.params == (3,) and e.children == (SpaceExpr("susp", (SpaceExpr("torus"),)),)
    assert parse("  wedge( S(1) ,RP2 ) ") == parse("wedge(S(1), RP2)")
    assert str(parse("symjoin2(surface(2))")) == "symjoin2(surface(2))"


@pytest.mark.parametrize("text,code,offset", [
    ("bary(0, S(1))", "E004", 5),
    ("S(0)", "E004", 2),
    ("sphere(2)", "E002", 0),
    ("wedge(pt, Sx(1))", "E002", 10),
    ("S(1, 2)", "E003", 5),
    ("susp", "E003", 4),
    ("torus(1)", "E003", 5),
    ("sp(S(1), 2)", "E005", 3),
    ("susp(3)", "E005", 5),
    ("S(1", "E001", 3),
    ("", "E001", 0),
    ("S(1))", "E006", 4),
    ("S(1) pt", "E006", 5),
])
def test_parse_errors(text, code, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.code == code
    assert info.value.offset == offset


def test_offsets_are_bytes():
    # the non-ASCII character takes two bytes in UTF-8
    with pytest.raises(ParseError) as info:
        parse("wedge(pt, é)")
    assert info.value.offset == len("wedge(pt, ".encode())
    with pytest.raises(ParseError) as info:
        parse("é")
    assert info.value.code == "E001" and info.value.offset == 0


def _expr(depth):
    leaves = st.sampled_from([SpaceExpr("pt"), SpaceExpr("RP2"), SpaceExpr("torus")]) | \
        st.integers(1, 9).map(lambda k: SpaceExpr("S", (k,))) | \
        st.integers(0, 9).map(lambda g: SpaceExpr("surface", (g,)))
    if depth == 0:
        return leaves
    sub = _expr(depth - 1)
    binary = st.tuples(st.sampled_from(["wedge", "prod", "smash"]), sub, sub).map(
        lambda t: SpaceExpr(t[0], (t[1], t[2])))
    unary = st.tuples(st.sampled_from(["susp", "symjoin2"]), sub).map(
        lambda t: SpaceExpr(t[0], (t[1],)))
    indexed = st.tuples(st.sampled_from(["sp", "rsp", "bary"]), st.integers(1, 12), sub).map(
        lambda t: SpaceExpr(t[0], (t[1], t[2])))
    return leaves | binary | unary | indexed


@given(_expr(3))
def test_print_parse_round_trip(e):
    assert parse(pretty(e)) == e
    assert parse(pretty(e).encode()) == e


def test_signatures_cover_grammar():
    assert set(SIGNATURES) == {"S", "pt", "RP2", "torus", "surface", "wedge", "prod", "smash",
                               "susp", "sp", "rsp", "bary", "symjoin2"}


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(budget=0)
    with pytest.raises(ValueError):
        RunConfig(p=4)
    with pytest.raises(ValueError):
        RunConfig(model="other")


# -- commands ----------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_homology_circle(capsys):
    code, out, _ = run(capsys, "homology", "bary(2, S(1))", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["agree"]
    groups = {g["degree"]: g["rank"] for g in doc["models"][0]["result"] if g["rank"]}
    assert groups == {0: 1, 3: 1}


def test_homology_both_models(capsys):
    code, out, _ = run(capsys, "homology", "bary(2, S(2))", "--model", "both")
    assert code == 0
    assert "H4=Z/2" in out
    assert out.count("H4=Z/2") == 2
    code, out, _ = run(capsys, "homology", "bary(2, RP2)", "--model", "both", "--mod", "2")
    assert code == 0 and "DISAGREE" not in out


def test_homology_plain_space(capsys):
    code, out, _ = run(capsys, "homology", "smash(S(1), S(2))")
    assert code == 0 and "simplicial: H0=Z, H3=Z" in out


def test_json_is_byte_identical(capsys):
    argv = ("homology", "bary(2, torus)", "--mod", "3", "--json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    argv = ("poincare", "--bary", "3", "--sphere", "2", "--mod", "2", "--dmax", "9", "--json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_euler_command(capsys):
    code, out, _ = run(capsys, "euler", "bary(2, torus)", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["census"] == 0 and doc["formula"] == 0 and doc["agree"]
    code, out, _ = run(capsys, "euler", "sp(2, S(2))")
    assert code == 0 and out.startswith("chi(sp(2, S(2))) = 3")
    code, out, _ = run(capsys, "euler", "symjoin2(RP2)", "--json")
    assert json.loads(out)["census"] == 1


def test_poincare_command(capsys):
    code, out, _ = run(capsys, "poincare", "--bary", "2", "--sphere", "2", "--dmax", "6",
                       "--source", "both", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["agree"]
    assert doc["series"]["symbolic"]["coeffs"] == [1, 0, 0, 0, 1, 1, 0]
    code, out, _ = run(capsys, "poincare", "--bary", "3", "--sphere", "2", "--mod", "3",
                       "--dmax", "8")
    assert code == 0 and "1 0 0 0 0 0 1 1 0" in out


def test_poincare_without_closed_form(capsys):
    code, _, err = run(capsys, "poincare", "--bary", "3", "--sphere", "3", "--mod", "3", "--dmax", "8")
    assert code == 2 and "no closed form" in err


def test_admissible_command(capsys):
    code, out, _ = run(capsys, "admissible", "--base", "3", "--dmax", "10", "--json")
    doc = json.loads(out)
    assert code == 0
    assert [w["indices"] for w in doc["words"]] == [[], [2], [4, 2]]
    assert [w["filtration"] for w in doc["words"]] == [1, 2, 4]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "homology", "bary(0, S(1))")
    assert code == 2 and "E004" in err and "byte 5" in err


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "homology", "bary(3, torus)", "--budget", "1000")
    assert code == 3 and "budget" in err


def test_budget_env_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("BARYTOP_CELL_BUDGET", "1000")
    code, _, _ = run(capsys, "euler", "sp(3, torus)")
    assert code == 3


def test_verify_small_suite(capsys):
    code, out, _ = run(capsys, "verify", "admissible", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["checks"]
    assert all(c["passed"] for c in doc["checks"])


def test_verify_text_report(capsys):
    code, out, _ = run(capsys, "verify", "wedge")
    assert code == 0 and "PASS" in out and "FAIL" not in out
