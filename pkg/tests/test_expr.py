import pytest
from hypothesis import given

from jacobson.arith import GF, QQ, Poly
from jacobson.expr import ParseError, parse, parse_poly, parse_scalar, tokenize
from strategies import elements


def test_normalize_examples():
    assert str(parse("X*Y", QQ, "jacobson")) == "1"
    assert str(parse("c'*d", QQ)) == "0"
    assert str(parse("c*c' + d*d'", QQ)) == "v"
    assert str(parse("Y*X", QQ, "jacobson")) == "v"


def test_scalars_and_division():
    assert parse("(1/2)*c + c/2", QQ) == parse("c", QQ)
    assert parse("3*c", GF(5)) == parse("-2*c", GF(5))
    assert parse("-(c - 1)^2", QQ) == parse("-c^2 + 2*c - 1", QQ)


@pytest.mark.parametrize("text,pos", [("c*+", 2), ("c + q", 4), ("(c", 2), ("c^x", 2), ("c/d", 2)])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text, QQ)
    assert info.value.pos == pos or f"position {info.value.pos}" in str(info.value)


def test_jacobson_presentation_rejects_lpa_names():
    with pytest.raises(ParseError):
        parse("c*X", QQ, "jacobson")


def test_parse_poly_forms():
    assert parse_poly("x^2+x-1", QQ) == Poly(QQ, [-1, 1, 1])
    assert parse_poly("[-1, 1, 1]", QQ) == Poly(QQ, [-1, 1, 1])
    assert parse_poly("2", QQ) == Poly(QQ, [2])
    with pytest.raises(ParseError):
        parse_poly("y + 1", QQ)
    assert parse_scalar("-3/4", QQ) == QQ("-3/4")


def test_tokens():
    kinds = [t[0] for t in tokenize("2*c'^3")]
    assert kinds[0] == "int"


@given(elements(QQ))
def test_print_parse_round_trip(e):
    assert parse(str(e), QQ) == e
