import random

import pytest
from hypothesis import given, strategies as st

from jacobson.algebra import C, Element, gen, poly_at_c, random_element
from jacobson.arith import GF, QQ, Poly
from jacobson.expr import parse
from jacobson.series import RationalSeries
from jacobson.simple import RwElement, rw_act, solve_poly_c_in_Rw
from jacobson.ymodule import (
    YElement, essential_witness, extend_hom_from_J, random_y, solve_pc_in_Y, y_act, y_coeff,
)
from strategies import elements, fields, nonzero_const_polys, series


def geo(F=QQ):
    return RationalSeries.from_fraction(Poly(F, [1]), Poly(F, [1, -1]))


def Yd(F=QQ):
    return YElement(F.zero, RationalSeries(Poly(F, [1])))


def test_action_examples():
    F = QQ
    y = YElement(F(3), geo().shift_up(2) + RationalSeries(Poly(F, [5])))
    assert y_act(parse("d'*c'^2", F), y) == YElement(F(1), RationalSeries.zero(F))
    assert y_act(gen(F, "w"), y) == YElement(F(3), RationalSeries.zero(F))
    assert y_act(gen(F, "d"), y) == YElement(F.zero, RationalSeries(Poly(F, [3])))


@given(st.data())
def test_v_action(data):
    F = data.draw(fields)
    y = YElement(data.draw(st.sampled_from([F.zero, F.one, F(2)])), data.draw(series(F)))
    v, c, cs = gen(F, "v"), gen(F, "c"), gen(F, "c'")
    expect = y - YElement(y.w_coeff, RationalSeries.zero(F))
    assert y_act(v, y) == expect
    # c c' + d d' = v, and d d' y = k_0 d
    assert y_act(c, y_act(cs, y)) + YElement(F.zero, RationalSeries(Poly(F, [y.series.coeff(0)]))) == expect


@given(st.data())
def test_module_axioms(data):
    F = data.draw(fields)
    r, s = data.draw(elements(F, 4)), data.draw(elements(F, 4))
    y = YElement(data.draw(st.sampled_from([F.zero, F.one])), data.draw(series(F)))
    assert y_act(r * s, y) == y_act(r, y_act(s, y))
    assert y_act(r + s, y) == y_act(r, y) + y_act(s, y)
    assert y_act(Element.one(F), y) == y


@given(st.data())
def test_action_on_rw_agrees(data):
    F = data.draw(fields)
    r = data.draw(elements(F))
    m = RwElement(F.one, Poly(F, [1, 2, 0, 3]))
    assert y_act(r, YElement.from_rw(m)) == YElement.from_rw(rw_act(r, m))
    assert YElement.from_rw(m).to_rw() == m


def test_witness_examples():
    F = QQ
    w_plus_d = YElement(F.one, RationalSeries(Poly(F, [1])))
    assert essential_witness(w_plus_d) == (gen(F, "w"), RwElement(F.one, Poly(F)))
    r, img = essential_witness(YElement(F.zero, geo().shift_up(2)))
    assert r == Element.mono(F, C(2)) and img == RwElement(F.one, Poly(F))
    r, img = essential_witness(Yd())
    assert r == gen(F, "d'") and img == RwElement(F.one, Poly(F))
    with pytest.raises(ValueError):
        essential_witness(YElement.zero(F))


@given(st.data())
def test_witness_random(data):
    F = data.draw(fields)
    y = YElement(data.draw(st.sampled_from([F.zero, F.one])), data.draw(series(F)))
    if not y:
        return
    r, img = essential_witness(y)
    assert img and y_act(r, y) == YElement.from_rw(img)


def test_extend_from_j_examples():
    F = QQ
    assert extend_hom_from_J(1, RationalSeries.zero(F)) == YElement(F.one, RationalSeries.zero(F))
    assert extend_hom_from_J(0, geo()).series == geo()
    assert extend_hom_from_J(0, RationalSeries(Poly.monomial(F, 1, 3))).to_rw() == RwElement(F.zero, Poly.monomial(F, 1, 3))


def test_solve_examples():
    F = QQ
    z = solve_pc_in_Y(Poly(F, [1, -1]), Yd())
    assert z.series == geo()
    assert solve_pc_in_Y(Poly(F, [-1, 1]), Yd()).series == -geo()
    y = random_y(F, random.Random(4))
    assert solve_pc_in_Y(Poly(F, [2]), y) == y * F("1/2")
    assert y_coeff(solve_pc_in_Y(Poly(F, [1, 1]), Yd()), 3) == -1
    assert y_coeff(YElement(F.one, RationalSeries(Poly(F, [1]))), -1) == 1
    assert y_coeff(YElement(F.zero, geo()), 7) == 1
    with pytest.raises(ValueError):
        y_coeff(Yd(), -2)


@given(st.data())
def test_solve_random(data):
    F = data.draw(fields)
    p = data.draw(nonzero_const_polys(F))
    y = YElement(data.draw(st.sampled_from([F.zero, F.one])), data.draw(series(F)))
    z = solve_pc_in_Y(p, y)
    assert y_act(poly_at_c(p), z) == y


@pytest.mark.parametrize("cs", [[-1, 1], [-1, 1, 1], [-1, 1, 0, 1]])
def test_rw_not_injective_but_y_is(cs):
    F = QQ
    f = Poly(F, cs)
    d = RwElement(F.zero, Poly(F, [1]))
    assert solve_poly_c_in_Rw(f, d) is None
    z = solve_pc_in_Y(f, YElement.from_rw(d))
    assert not z.in_rw
    with pytest.raises(ValueError):
        z.to_rw()
