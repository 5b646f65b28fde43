import json
import random

import pytest

from ffmin.algebra import Poly, RatFun
from ffmin.cli import main
from ffmin.curve import PlaceKind, make_curve
from ffmin.curveparse import (
    CurveSpec,
    parse_curve,
    parse_element,
    parse_places,
    parse_ratfun,
)
from ffmin.errors import ParseError, SemanticError


def test_parse_curve_examples():
    spec = parse_curve("y^2 = x^5 + 2*x + 1 over gf(7)")
    assert spec.p == 7 and spec.m == 2
    assert spec.f == Poly(7, (1, 2, 0, 0, 0, 1))
    # whitespace-insensitive and case-tolerant
    assert parse_curve("Y^2=X^5+2*X+1 OVER GF(7)") == spec
    # semantic: x^5 + x^5 collapses to 2x^5, which is not squarefree
    with pytest.raises(SemanticError) as e:
        parse_curve("y^2 = x^5 + x^5 over gf(7)")
    assert e.value.code == "NOT_SQUAREFREE"
    with pytest.raises(SemanticError) as e:
        parse_curve("y^2 = x^5 over gf(4)")
    assert e.value.code == "NOT_PRIME"
    with pytest.raises(SemanticError) as e:
        parse_curve("y^2 = x^5+1 over gf(2)")
    assert e.value.code == "EVEN_CHAR"
    with pytest.raises(SemanticError) as e:
        parse_curve("y^3 = x^6+x+1 over gf(7)")
    assert e.value.code == "BAD_M"
    with pytest.raises(SemanticError) as e:
        parse_curve("y^2 = x + 1 over gf(7)")
    assert e.value.code == "DEGREE_TOO_SMALL"


def test_parse_curve_syntax_errors_positioned():
    with pytest.raises(ParseError) as e:
        parse_curve("y^2 = x^5 + ? over gf(7)")
    assert e.value.position == 12
    with pytest.raises(ParseError):
        parse_curve("y^2 = x^5 + 1")
    with pytest.raises(ParseError):
        parse_curve("z^2 = x^5 + 1 over gf(7)")


def test_parse_curve_roundtrip():
    rng = random.Random(0)
    for _ in range(60):
        p = rng.choice([3, 5, 7, 11])
        while True:
            deg = rng.randrange(3, 8)
            coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
            try:
                spec = CurveSpec(p=p, m=2, f=Poly(p, coeffs))
                spec.curve()
                break
            except Exception:
                continue
        assert parse_curve(spec.render()) == spec


def test_parse_ratfun():
    r = parse_ratfun("x^2 + 1", 7)
    assert r == RatFun(Poly(7, (1, 0, 1)))
    r = parse_ratfun("1/x", 7)
    assert r == RatFun(Poly.one(7), Poly.x(7))
    r = parse_ratfun("-x/(...)".replace("(...)", "x + 1") if False else "3*x/2", 7)
    assert r == RatFun(Poly(7, (0, 3))) / RatFun(Poly(7, (2,)))
    with pytest.raises(SemanticError) as e:
        parse_ratfun("1/0", 7)
    assert e.value.code == "ZERO_DENOMINATOR"


def test_parse_element_and_places():
    c = make_curve(7, Poly(7, (1, 0, 0, 1)))  # y^2 = x^3 + 1
    x = parse_element("1/x; x + 2", c)
    assert x.a == RatFun(Poly.one(7), Poly.x(7))
    assert x.b == RatFun(Poly(7, (2, 1)))
    with pytest.raises(ParseError):
        parse_element("1/x", c)
    # place expansion: f(1) = 2 has roots y = 3, 4
    places = parse_places("x=1", c)
    assert {P.y0 for P in places} == {3, 4}
    places = parse_places("x=1,y=3; inf", c)
    assert len(places) == 2
    assert places[-1].kind == PlaceKind.INF_RAMIFIED
    with pytest.raises(SemanticError):
        parse_places("x=1,y=5", c)  # 5^2 = 4 != 2
    with pytest.raises(SemanticError):
        parse_places("inf+", c)  # odd model: infinity does not split
    cs = make_curve(7, Poly(7, (1, 0, 0, 0, 0, 0, 1)))
    assert len(parse_places("inf", cs)) == 2  # split infinity expands
    assert len(parse_places("inf+", cs)) == 1


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_cli_gaps(capsys):
    rc, out, _ = run_cli(capsys, "gaps", "y^2=x^5+2*x+1 over gf(7)", "--place", "inf")
    assert rc == 0
    assert "gaps   1, 3" in out and "mu     3" in out


def test_cli_minimum_and_reduce(capsys):
    rc, out, _ = run_cli(capsys, "minimum", "y^2=3*x^6+x over gf(7)")
    assert rc == 0 and "EXACT" in out and "THM10" in out and "value    4" in out
    rc, out, _ = run_cli(
        capsys, "reduce", "y^2=3*x^6+x over gf(7)", "--element", "x^2 + 1/x; 2/x^2"
    )
    assert rc == 0 and "value" in out
    rc, out, err = run_cli(
        capsys, "reduce", "y^2=x^6+1 over gf(7)", "--element", "1/x;0"
    )
    assert rc == 2 and "no exact reduction" in err


def test_cli_mu_and_semigroup(capsys):
    rc, out, _ = run_cli(
        capsys, "mu", "y^2=x^3-x over gf(7)", "--places", "x=0;x=1", "--height", "3"
    )
    assert rc == 0 and "mu          0" in out
    rc, out, _ = run_cli(capsys, "semigroup", "3", "4")
    assert rc == 0 and "1, 2, 5" in out and "frobenius   5" in out


def test_cli_usage_errors(capsys):
    rc, _, err = run_cli(capsys, "gaps", "y^2 = x^5 over gf(4)", "--place", "inf")
    assert rc == 2 and "NOT_PRIME" in err
    rc, _, err = run_cli(capsys, "verify")
    assert rc == 2
    rc, _, err = run_cli(capsys, "gaps", "y^2=x^6+1 over gf(7)", "--place", "inf")
    assert rc == 2 and "ambiguous" in err
    rc, _, _ = run_cli(capsys, "nonsense")
    assert rc == 2


def test_cli_verify_json_deterministic(capsys):
    args = ["verify", "--family", "p=5,deg=3..3", "--seed", "1", "--samples", "5", "--json"]
    rc1, out1, _ = run_cli(capsys, *args)
    rc2, out2, _ = run_cli(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2
    lines = out1.strip().split("\n")
    assert json.loads(lines[-1])["summary"]["failed"] == 0
    for line in lines[:-1]:
        rec = json.loads(line)
        assert rec["passed"] is True


def test_cli_verify_single_with_cor5(capsys):
    rc, out, _ = run_cli(
        capsys, "verify", "y^2=x^5+2*x+1 over gf(7)", "--samples", "10", "--cor5", "3,4"
    )
    assert rc == 0
    assert "COR5_SEMIGROUP" in out and "PASS" in out
