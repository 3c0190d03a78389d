import pytest
from hypothesis import given, strategies as st

from jacobson.algebra import gen, poly_at_c
from jacobson.arith import GF, QQ, Poly
from jacobson.simple import (
    RwElement, VfElement, act_Vf, annihilator_check, rho, rw_act, simplicity_probe, solve_poly_c_in_Rw,
    xbar_power,
)
from strategies import elements, fields, polys

F_LIST = [[-1, 1], [-1, 1, 1], [-1, 1, 0, 1]]


@given(st.data())
def test_vf_module_axioms(data):
    F = data.draw(fields)
    f = Poly(F, data.draw(st.sampled_from(F_LIST)))
    r, s = data.draw(elements(F, 3)), data.draw(elements(F, 3))
    m = VfElement(f, data.draw(polys(F, 3)))
    assert act_Vf(r * s, m) == act_Vf(r, act_Vf(s, m))
    assert act_Vf(r + s, m) == act_Vf(r, m) + act_Vf(s, m)
    assert not act_Vf(poly_at_c(f), m)
    assert act_Vf(gen(F, "c"), m).residue == (m.residue * Poly.x(F)) % f
    assert not act_Vf(gen(F, "w"), m)


def test_xbar_inverse():
    f = Poly(QQ, [-1, 1, 1])
    assert (xbar_power(f, 1) * xbar_power(f, -1)) % f == Poly(QQ, [1])
    assert act_Vf(gen(QQ, "c'") * gen(QQ, "c"), VfElement.basis(f, 1)) == VfElement.basis(f, 1)


def test_annihilator_is_ideal():
    f = Poly(QQ, [-1, 1])
    assert annihilator_check(poly_at_c(f), f)
    assert annihilator_check(gen(QQ, "w"), f)
    assert not annihilator_check(gen(QQ, "v"), f)


def test_rho_examples():
    f = Poly(QQ, [-1, 1])
    assert rho(gen(QQ, "c"), f).residue == Poly(QQ, [1])
    assert not rho(gen(QQ, "d"), f)


@given(st.data())
def test_rw_action_matches_multiplication(data):
    F = data.draw(fields)
    r, s = data.draw(elements(F)), data.draw(elements(F))
    m = RwElement(data.draw(st.sampled_from([F.zero, F.one])), data.draw(polys(F, 4)))
    assert rw_act(r, m).to_element() == r * m.to_element()
    assert rw_act(r * s, m) == rw_act(r, rw_act(s, m))


def test_rw_from_element_rejects_other_sectors():
    with pytest.raises(ValueError):
        RwElement.from_element(gen(QQ, "c"))


def test_solve_rw_examples():
    F = QQ
    d = RwElement(F.zero, Poly(F, [1]))
    rep = solve_poly_c_in_Rw(Poly(F, [2]), d)
    assert rep.solution == RwElement(F.zero, Poly(F, [F("1/2")])) and rep.kernel_dim == 0
    cd = RwElement(F.zero, Poly(F, [0, 1]))
    rep = solve_poly_c_in_Rw(Poly(F, [0, 1]), cd)
    assert rep.solution == d and rep.kernel_dim == 1
    for cs in F_LIST:
        assert solve_poly_c_in_Rw(Poly(F, cs), d) is None


@given(st.data())
def test_solutions_verify(data):
    F = data.draw(fields)
    p = data.draw(polys(F, 3).filter(bool))
    b = RwElement(data.draw(st.sampled_from([F.zero, F.one])), data.draw(polys(F, 4)))
    rep = solve_poly_c_in_Rw(p, b)
    if rep is not None:
        assert rw_act(poly_at_c(p), rep.solution) == b


@pytest.mark.parametrize("F,cs", [(GF(5), [-1, 1]), (GF(3), [-1, 1, 1]), (GF(5), [-1, 1, 0, 1]), (GF(7), [-1, 1])])
def test_simplicity(F, cs):
    assert simplicity_probe(Poly(F, cs))


def test_simplicity_fails_for_reducible_f():
    # over GF(5), x^2 + x - 1 = (x - 2)^2 and V^f has a proper submodule
    assert not simplicity_probe(Poly(GF(5), [-1, 1, 1]))


def test_simplicity_bounds():
    with pytest.raises(ValueError):
        simplicity_probe(Poly(QQ, [-1, 1]))
    with pytest.raises(ValueError):
        simplicity_probe(Poly(GF(11), [-1, 1]))
