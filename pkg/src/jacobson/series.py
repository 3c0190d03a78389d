"""Power series with rational generating functions.

A :class:`RationalSeries` is ``poly_part + num/den`` expanded at 0, kept in a
canonical form (``den`` monic with ``den(0) != 0``, ``deg num < deg den``,
``gcd(num, den) = 1``), so ``==`` decides equality of coefficient streams.
"""

from __future__ import annotations

import random
from typing import Optional

from .arith import Field, Poly, PPoly, poly_gcd


class RationalSeries:
    __slots__ = ("poly_part", "num", "den")

    def __init__(self, poly_part: Poly, num: Optional[Poly] = None, den: Optional[Poly] = None):
        F = poly_part.field
        num = Poly(F) if num is None else num
        den = Poly.const(F, 1) if den is None else den
        if not den[0]:
            raise ValueError("denominator must not vanish at 0")
        total = poly_part * den + num
        if not total:
            self.poly_part, self.num, self.den = Poly(F), Poly(F), Poly.const(F, 1)
            return
        g = poly_gcd(total, den)
        if g.degree > 0:
            total, den = total // g, den // g
        inv = 1 / den.lead
        total, den = total * inv, den * inv
        self.poly_part, self.num = divmod(total, den)
        self.den = den

    @classmethod
    def from_fraction(cls, num: Poly, den: Poly) -> "RationalSeries":
        return cls(Poly(num.field), num, den)

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalSeries":
        return cls(p)

    @classmethod
    def zero(cls, field: Field) -> "RationalSeries":
        return cls(Poly(field))

    @property
    def field(self) -> Field:
        return self.den.field

    def numerator(self) -> Poly:
        """Numerator of the whole series as one fraction over ``den``."""
        return self.poly_part * self.den + self.num

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.poly_part) or bool(self.num)

    def coeffs(self, n: int) -> list:
        """The first ``n`` coefficients."""
        den = self.den.coeffs
        d0inv = 1 / den[0]
        tail = []
        for k in range(n):
            acc = self.num[k]
            for i in range(1, min(len(den), k + 1)):
                acc = acc - den[i] * tail[k - i]
            tail.append(acc * d0inv)
        return [self.poly_part[k] + tail[k] for k in range(n)]

    def coeff(self, n: int):
        if n < 0:
            raise ValueError("negative coefficient index")
        return self.coeffs(n + 1)[n]

    @property
    def valuation(self) -> int:
        """Index of the first nonzero coefficient, -1 for the zero series."""
        return self.numerator().valuation

    def _as_fraction(self, other):
        if isinstance(other, RationalSeries):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.numerator(), other.den
        if isinstance(other, Poly):
            return other, Poly.const(self.field, 1)
        return None

    def __add__(self, other):
        o = self._as_fraction(other)
        if o is None:
            return NotImplemented
        n2, d2 = o
        return RationalSeries(Poly(self.field), self.numerator() * d2 + n2 * self.den, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(-self.poly_part, -self.num, self.den)

    def __sub__(self, other):
        o = self._as_fraction(other)
        if o is None:
            return NotImplemented
        n2, d2 = o
        return RationalSeries(Poly(self.field), self.numerator() * d2 - n2 * self.den, self.den * d2)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._as_fraction(other)
        if o is None:
            k = self.field(other)
            return RationalSeries(self.poly_part * k, self.num * k, self.den)
        n2, d2 = o
        return RationalSeries(Poly(self.field), self.numerator() * n2, self.den * d2)

    __rmul__ = __mul__

    def shift_up(self, k: int = 1) -> "RationalSeries":
        """Multiply by x^k."""
        return RationalSeries(Poly(self.field), self.numerator().shift(k), self.den)

    def shift_down(self, k: int = 1) -> "RationalSeries":
        """Drop the first ``k`` coefficients and re-index from 0."""
        if k == 0:
            return self
        head = Poly(self.field, self.coeffs(k))
        rest = self.numerator() - head * self.den
        return RationalSeries(Poly(self.field), rest.shift(-k), self.den)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (self.poly_part, self.num, self.den) == (other.poly_part, other.num, other.den)

    def __hash__(self):
        return hash((self.poly_part, self.num, self.den))

    def __repr__(self):
        return f"RationalSeries({self.poly_part}, {self.num}, {self.den})"

    def __str__(self):
        if self.is_polynomial:
            return str(self.poly_part)
        frac = f"({self.num})/({self.den})"
        return frac if not self.poly_part else f"{self.poly_part} + {frac}"


def series_invert(p: PPoly) -> RationalSeries:
    """The power series ``a`` with ``p * a = 1``."""
    if not p[0]:
        raise ValueError("p(0) must be nonzero")
    return RationalSeries.from_fraction(Poly.const(p.field, 1), p)


def series_coeff(s: RationalSeries, n: int):
    return s.coeff(n)


def series_arith(a: RationalSeries, b: RationalSeries, op: str) -> RationalSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def random_series(field: Field, rng: random.Random, *, max_deg: int = 3, bound: int = 5,
                  tail: Optional[bool] = None) -> RationalSeries:
    """Random series; ``tail`` forces (True) or forbids (False) a rational tail."""
    from .arith import random_poly

    pp = random_poly(field, rng, rng.randint(-1, max_deg), bound)
    if tail is None:
        tail = rng.random() < 0.7
    if not tail:
        return RationalSeries(pp)
    while True:
        den = random_poly(field, rng, rng.randint(1, max_deg), bound)
        if den[0] and den.degree >= 1:
            break
    num = random_poly(field, rng, rng.randint(0, den.degree - 1), bound)
    return RationalSeries(pp, num, den)
