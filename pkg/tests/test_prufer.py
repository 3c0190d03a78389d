import random

import pytest
from hypothesis import given, strategies as st

from jacobson.algebra import C, Element, gen, poly_at_c
from jacobson.arith import GF, QQ, Poly
from jacobson.prufer import (
    MnElement, UfElement, alpha, cyclic_submodules, extend_hom_to_Uf, fc_socle_dimension, is_chain, mn_act,
    psi, random_mn, random_uf, solve_linear_in_Mn, submodule_chain, uf_act, uf_divide_by_fc, uf_from,
    uf_normalize,
)
from strategies import elements, fields

F_IRRED = [(QQ, [-1, 1]), (QQ, [-1, 1, 1]), (QQ, [-1, 1, 0, 1]), (GF(5), [-1, 1]), (GF(5), [-1, 1, 0, 1])]


def x_minus_1(F=QQ):
    return Poly(F, [-1, 1])


def test_mn_examples():
    f = x_minus_1()
    one2 = MnElement.generator(f, 2)
    fc = poly_at_c(f)
    assert mn_act(fc, one2).coords == (Poly(QQ), Poly(QQ, [1]))
    assert mn_act(gen(QQ, "c"), one2).coords == (Poly(QQ, [1]), Poly(QQ, [1]))
    assert not mn_act(gen(QQ, "w"), one2)


def test_mn_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        MnElement(x_minus_1(), 2, (Poly(QQ, [1]),))
    with pytest.raises(ValueError):
        MnElement(x_minus_1(), 1, (Poly(QQ, [0, 1]),))


def test_psi_examples():
    f = x_minus_1()
    m = MnElement.generator(f, 1)
    assert psi(m, 3).coords == (Poly(QQ), Poly(QQ), Poly(QQ, [1]))
    assert not psi(MnElement.zero(f, 1), 2)
    with pytest.raises(ValueError):
        psi(psi(m, 2), 1)


def test_normalize_examples():
    f = x_minus_1()
    u = uf_normalize(f, 3, psi(MnElement.generator(f, 1), 3))
    assert u == alpha(f, 1) and u.level == 1
    m = MnElement(f, 2, (Poly(QQ, [1]), Poly(QQ)))
    assert uf_normalize(f, 2, m).level == 2
    assert uf_normalize(f, 3, MnElement.zero(f, 3)) == uf_normalize(f, 1, MnElement.zero(f, 1))


@pytest.mark.parametrize("F,cs", F_IRRED)
def test_mn_module_axioms(F, cs):
    f = Poly(F, cs)
    rng = random.Random(1)
    from jacobson.algebra import random_element
    for _ in range(15):
        r, s = random_element(F, rng, max_index=4), random_element(F, rng, max_index=4)
        m = random_mn(f, 2, rng)
        assert mn_act(r * s, m) == mn_act(r, mn_act(s, m))
        assert mn_act(r + s, m) == mn_act(r, m) + mn_act(s, m)


@given(st.data())
def test_pushout_square(data):
    F = data.draw(fields)
    f = Poly(F, [-1, 1, 1])
    n = data.draw(st.integers(2, 3))
    r = data.draw(elements(F, 3))
    assert psi(MnElement.from_element(r, f, n - 1), n) == MnElement.from_element(r * poly_at_c(f), f, n)


@given(st.data())
def test_psi_functorial(data):
    F = data.draw(fields)
    f = x_minus_1(F)
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    m = random_mn(f, 1, rng)
    assert psi(psi(m, 2), 4) == psi(m, 4)


def test_f_of_c_has_no_preimage_of_one():
    for F in (QQ, GF(5)):
        for cs in ([-1, 1], [-1, 1, 1]):
            f = Poly(F, cs)
            for n in range(1, 5):
                assert solve_linear_in_Mn(poly_at_c(f), MnElement.generator(f, n)) is None
    f = x_minus_1()
    x = solve_linear_in_Mn(poly_at_c(f), mn_act(poly_at_c(f), MnElement.generator(f, 2)))
    assert mn_act(poly_at_c(f), x) == mn_act(poly_at_c(f), MnElement.generator(f, 2))
    b = random_mn(f, 3, random.Random(0))
    assert solve_linear_in_Mn(Element.one(QQ), b) == b


def test_dimension_bound():
    with pytest.raises(ValueError):
        solve_linear_in_Mn(Element.one(QQ), MnElement.generator(x_minus_1(), 65))


def test_uf_division_examples():
    f = x_minus_1()
    fc = poly_at_c(f)
    assert uf_act(fc, alpha(f, 2)) == alpha(f, 1)
    assert uf_divide_by_fc(alpha(f, 1)) == alpha(f, 2)


@pytest.mark.parametrize("F,cs", F_IRRED)
def test_uf_divisibility_and_socle(F, cs):
    f = Poly(F, cs)
    rng = random.Random(2)
    fc = poly_at_c(f)
    killers = [gen(F, "w")] + [Element.mono(F, C(i)) for i in range(7)]
    for _ in range(20):
        u = random_uf(f, 3, rng)
        assert uf_act(fc, uf_divide_by_fc(u)) == u
        assert all(not uf_act(k, u) for k in killers)
    for n in (1, 2, 3):
        assert fc_socle_dimension(f, n) == f.degree


def test_extend_examples():
    F = QQ
    f = x_minus_1()
    assert extend_hom_to_Uf(f, f, alpha(f, 1)) == alpha(f, 2)
    assert extend_hom_to_Uf(Poly(F, [-2, 1]), f, alpha(f, 1)) == -alpha(f, 1)
    u = random_uf(f, 3, random.Random(5))
    assert extend_hom_to_Uf(Poly(F, [1]), f, u) == u


@pytest.mark.parametrize("F,cs", F_IRRED)
def test_extend_postcondition(F, cs):
    f = Poly(F, cs)
    rng = random.Random(3)
    from jacobson.arith import random_poly
    for _ in range(20):
        p = random_poly(F, rng, rng.randint(0, 5))
        if not p or not p[0]:
            continue
        if rng.random() < 0.5:
            p = p * f
        u = random_uf(f, 3, rng)
        phi = extend_hom_to_Uf(p, f, u)
        assert uf_act(poly_at_c(p), phi) == u


def test_uniserial_examples():
    assert submodule_chain(Poly(GF(3), [-1, 1]), 3) == [0, 1, 2, 3]
    assert submodule_chain(Poly(GF(3), [-1, 1, 1]), 2) == [0, 2, 4]
    assert submodule_chain(Poly(GF(5), [-1, 1, 0, 1]), 1) == [0, 3]
    subs = cyclic_submodules(Poly(GF(3), [-1, 1, 1]), 3)
    assert is_chain(subs, 3) and len(subs) == 4


def test_non_uniserial_when_f_splits():
    # x^2 - 1 = (x - 1)(x + 1) has two distinct roots, so M_1 is a direct sum
    subs = cyclic_submodules(Poly(GF(5), [-1, 0, 1]), 1)
    assert not is_chain(subs, 5)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        submodule_chain(Poly(QQ, [-1, 1]), 2)
    with pytest.raises(ValueError):
        submodule_chain(Poly(GF(3), [-1, 1]), 13)
