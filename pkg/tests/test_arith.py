from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from jacobson.arith import (
    GF, QQ, Field, FPoly, Fp, LaurentPoly, Poly, PPoly, is_irreducible, laurent_gcd, poly_gcd, poly_xgcd,
    rational_roots, require_unit_constant,
)
from strategies import fields, polys, scalars

X = sympy.symbols("x")


def to_sympy(p: Poly):
    return sum(sympy.Rational(int(a.v) if p.field.p else a) * X**k for k, a in enumerate(p.coeffs)) if p else sympy.Integer(0)


def sympy_poly(p: Poly):
    dom = sympy.GF(p.field.p) if p.field.p else sympy.QQ
    return sympy.Poly(to_sympy(p), X, domain=dom)


def P(F, *cs):
    return Poly(F, list(cs))


class TestField:
    def test_names(self):
        assert Field.from_name("q") is QQ
        assert Field.from_name("fp:7") == GF(7)
        assert GF(7).name == "fp:7" and QQ.name == "q"
        with pytest.raises(ValueError):
            Field.from_name("fp:8")
        with pytest.raises(ValueError):
            Field.from_name("r")

    def test_coercion(self):
        assert QQ("3/6") == Fraction(1, 2)
        assert GF(5)(Fraction(1, 2)) == Fp(3, 5)
        assert GF(5)("-1") == Fp(4, 5)
        with pytest.raises(ZeroDivisionError):
            GF(5)(Fraction(1, 5))
        with pytest.raises(ValueError):
            QQ.parse("1/0")

    def test_fp_arithmetic(self):
        a, b = Fp(3, 7), Fp(5, 7)
        assert a + b == Fp(1, 7)
        assert a * b == Fp(1, 7)
        assert a / b * b == a
        assert -a == Fp(4, 7)
        assert a ** -1 == Fp(5, 7)


class TestPoly:
    def test_trim_and_degree(self):
        p = P(QQ, 1, 2, 0, 0)
        assert p.degree == 1 and list(p.coeffs) == [1, 2]
        assert Poly(QQ).degree == -1

    def test_divmod_example(self):
        q, r = divmod(P(QQ, -1, 0, 1), P(QQ, -1, 1))
        assert q == P(QQ, 1, 1) and not r

    def test_shift(self):
        p = P(QQ, 1, 2, 3)
        assert p.shift(2) == P(QQ, 0, 0, 1, 2, 3)
        assert p.shift(-1) == P(QQ, 2, 3)

    def test_str(self):
        assert str(P(QQ, -1, 1, 1)) == "x^2 + x - 1"

    @given(st.data())
    def test_ring_axioms(self, data):
        F = data.draw(fields)
        a, b, c = (data.draw(polys(F)) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a

    @given(st.data())
    def test_division_identity(self, data):
        F = data.draw(fields)
        a = data.draw(polys(F, 7))
        b = data.draw(polys(F, 3).filter(bool))
        q, r = divmod(a, b)
        assert q * b + r == a and r.degree < b.degree

    @given(st.data())
    def test_xgcd_against_sympy(self, data):
        F = data.draw(fields)
        a = data.draw(polys(F, 4))
        b = data.draw(polys(F, 4))
        if not a and not b:
            with pytest.raises(ValueError):
                poly_xgcd(a, b)
            return
        g, s, t = poly_xgcd(a, b)
        assert s * a + t * b == g
        assert g.lead == 1
        expect = sympy.gcd(sympy_poly(a), sympy_poly(b)).monic()
        assert sympy_poly(g) == expect


IRRED_CASES = [
    (QQ, [-1, 1], True),
    (QQ, [-1, 1, 1], True),
    (QQ, [-1, 1, 0, 1], True),
    (GF(101), [-1, 1, 1], False),  # 45^2 = 5 mod 101
    (GF(5), [-1, 1, 1], False),  # (x - 2)^2
    (GF(3), [-1, 1, 1], True),
    (GF(3), [-1, 1, 0, 1], False),
    (GF(5), [-1, 1, 0, 1], True),
    (GF(101), [-1, 1, 0, 1], True),
    (GF(5), [-1, 2, 1], True),
]


@pytest.mark.parametrize("F,cs,expected", IRRED_CASES)
def test_irreducibility(F, cs, expected):
    p = Poly(F, cs)
    assert is_irreducible(p) is expected
    assert sympy_poly(p).is_irreducible is expected


@given(st.data())
def test_irreducibility_matches_sympy_mod_p(data):
    F = data.draw(st.sampled_from([GF(2), GF(3), GF(5), GF(7)]))
    p = data.draw(polys(F, 5).filter(lambda p: p.degree >= 1))
    assert is_irreducible(p) == sympy_poly(p).is_irreducible


def test_irreducibility_over_q_unknown_for_high_degree():
    # x^4 + 1 has no rational root but factors over no quadratic with rational coeffs either;
    # the root test alone cannot decide degree 4
    assert is_irreducible(P(QQ, 1, 0, 0, 0, 1)) is None
    assert is_irreducible(P(QQ, -2, 0, 1)) is True
    assert rational_roots(P(QQ, -1, 0, 2, 0)) == []


def test_fpoly_and_ppoly():
    FPoly(P(QQ, -1, 1))
    with pytest.raises(ValueError):
        FPoly(P(QQ, 1, 1))  # f(0) != -1
    with pytest.raises(ValueError):
        FPoly(P(GF(5), -1, 1, 1))  # reducible
    FPoly(P(QQ, -1, 0, 0, 0, 1, 1), assume_irreducible=True)
    with pytest.raises(ValueError):
        PPoly(P(QQ, 0, 1))
    with pytest.raises(ValueError):
        require_unit_constant(P(QQ, 2, 1))


class TestLaurent:
    def test_arithmetic(self):
        a = LaurentPoly.from_terms(QQ, {-1: 1, 1: 1})
        b = LaurentPoly.from_terms(QQ, {1: 1})
        assert a * b == LaurentPoly.from_terms(QQ, {0: 1, 2: 1})
        assert a - a == LaurentPoly.from_terms(QQ, {})

    def test_gcd_examples(self):
        x_minus_1 = LaurentPoly.from_terms(QQ, {1: 1, 0: -1})
        shifted = LaurentPoly.from_terms(QQ, {3: 2, 2: -2})  # 2 x^2 (x - 1)
        other = LaurentPoly.from_terms(QQ, {-1: 1, -2: -1})  # (x - 1) / x^2
        assert laurent_gcd([shifted, other]) == P(QQ, -1, 1)
        assert laurent_gcd([LaurentPoly.from_terms(QQ, {5: 3})]) == P(QQ, 1)
        with pytest.raises(ValueError):
            laurent_gcd([LaurentPoly.from_terms(QQ, {})])
        assert laurent_gcd([x_minus_1, LaurentPoly.from_terms(QQ, {0: 1, 1: 1})]) == P(QQ, 1)

    @given(st.data())
    def test_gcd_divides_and_is_normalized(self, data):
        F = data.draw(fields)
        ps = data.draw(st.lists(polys(F, 4).filter(bool), min_size=1, max_size=3))
        shifts = data.draw(st.lists(st.integers(-3, 3), min_size=len(ps), max_size=len(ps)))
        items = [LaurentPoly(F, s, p.coeffs) for p, s in zip(ps, shifts)]
        g = laurent_gcd(items)
        assert g[0] and g.lead == 1
        for p in ps:
            assert not (p.shift(-p.valuation) % g)
        expect = ps[0]
        for p in ps[1:]:
            expect = poly_gcd(expect, p)
        expect = expect.shift(-expect.valuation)
        assert g == expect.monic()
