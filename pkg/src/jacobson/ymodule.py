"""The module ``Y`` of formal series ``k_{-1} w + k_0 d + k_1 c d + k_2 c^2 d + ...``.

``Y`` contains ``Rw`` (the series with finite support) as an essential
submodule and is injective. Elements here carry a rational coefficient
stream ``k_0, k_1, ...`` (see :class:`~jacobson.series.RationalSeries`),
which is closed under the action and under division by ``p(c)`` with
``p(0) != 0``, and keeps equality decidable.

Action on ``y``: ``w y = k_{-1} w``, ``c^i d y = k_{-1} c^i d``,
``d' c'^j y = k_j w``, and ``c^i c'^j`` drops the ``w`` part, shifts the
stream down by ``j`` and then up by ``i``. In particular
``v y = y - k_{-1} w``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import C, Element, gen, poly_at_c
from .arith import Field, Poly
from .series import RationalSeries, random_series, series_invert
from .simple import RwElement


@dataclass(frozen=True)
class YElement:
    w_coeff: object
    series: RationalSeries

    @classmethod
    def zero(cls, field: Field) -> "YElement":
        return cls(field.zero, RationalSeries.zero(field))

    @classmethod
    def from_rw(cls, m: RwElement) -> "YElement":
        return cls(m.w_coeff, RationalSeries(m.d_poly))

    @property
    def field(self) -> Field:
        return self.series.field

    def to_rw(self) -> RwElement:
        """Back to ``Rw`` when the stream has finite support."""
        if not self.series.is_polynomial:
            raise ValueError("element has infinite support; not in Rw")
        return RwElement(self.w_coeff, self.series.poly_part)

    @property
    def in_rw(self) -> bool:
        return self.series.is_polynomial

    def __add__(self, other: "YElement"):
        return YElement(self.w_coeff + other.w_coeff, self.series + other.series)

    def __neg__(self):
        return YElement(-self.w_coeff, -self.series)

    def __sub__(self, other: "YElement"):
        return self + (-other)

    def __mul__(self, k):
        k = self.field(k)
        return YElement(self.w_coeff * k, self.series * k)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.w_coeff) or bool(self.series)

    def __str__(self):
        parts = []
        if self.w_coeff:
            parts.append("w" if self.w_coeff == 1 else f"{self.w_coeff}*w")
        if self.series:
            parts.append(f"S(c)*d with S(x) = {self.series}")
        return " + ".join(parts) if parts else "0"


def y_act(r: Element, y: YElement) -> YElement:
    if r.field != y.field:
        raise ValueError("field mismatch")
    F = y.field
    k_w = y.w_coeff
    w_out = F.zero
    b_part: dict[int, object] = {}
    a_by_shift: dict[int, dict[int, object]] = {}
    for m, k in r.terms.items():
        s, i, j = m
        if s == "D":
            w_out = w_out + k * k_w
        elif s == "C":
            w_out = w_out + k * y.series.coeff(j)
        elif s == "B":
            b_part[i] = b_part.get(i, F.zero) + k * k_w
        else:
            row = a_by_shift.setdefault(j, {})
            row[i] = row.get(i, F.zero) + k
    top = max(b_part, default=-1)
    out = RationalSeries(Poly(F, [b_part.get(i, 0) for i in range(top + 1)]))
    for j, row in a_by_shift.items():
        hi = max(row)
        mult = Poly(F, [row.get(i, 0) for i in range(hi + 1)])
        if mult:
            out = out + y.series.shift_down(j) * mult
    return YElement(w_out, out)


def y_coeff(y: YElement, idx: int):
    """``k_{-1}`` for ``idx == -1``, else the coefficient of ``c^idx d``."""
    if idx < -1:
        raise ValueError("index must be >= -1")
    return y.w_coeff if idx == -1 else y.series.coeff(idx)


def essential_witness(y: YElement) -> tuple[Element, RwElement]:
    """``(r, r y)`` with ``r y`` a nonzero element of ``Rw``."""
    if not y:
        raise ValueError("zero element has no witness")
    F = y.field
    if y.w_coeff:
        r = gen(F, "w")
    else:
        r = Element.mono(F, C(y.series.valuation))
    image = y_act(r, y).to_rw()
    if not image:
        raise RuntimeError("witness image vanished")
    return r, image


def extend_hom_from_J(w_val, vals: RationalSeries, *, check_upto: int = 32) -> YElement:
    """``Phi(1)`` for the hom ``J -> Y`` with ``w -> w_val w``, ``d' c'^i -> k_i w``."""
    F = vals.field
    phi1 = YElement(F(w_val), vals)
    if y_act(gen(F, "w"), phi1) != YElement(F(w_val), RationalSeries.zero(F)):
        raise RuntimeError("restriction to w is wrong")
    ks = vals.coeffs(check_upto + 1)
    for i in range(check_upto + 1):
        got = y_act(Element.mono(F, C(i)), phi1)
        if got != YElement(ks[i], RationalSeries.zero(F)):
            raise RuntimeError(f"restriction to d'c'^{i} is wrong")
    return phi1


def solve_pc_in_Y(p: Poly, y: YElement) -> YElement:
    """The ``z`` with ``p(c) z = y`` (``p(0) != 0``): ``z = alpha(c) y`` for ``alpha = 1/p``."""
    if not p[0]:
        raise ValueError("p(0) must be nonzero")
    z = YElement(y.w_coeff / p[0], y.series * series_invert(p))
    if y_act(poly_at_c(p), z) != y:
        raise RuntimeError("p(c) z != y")
    return z


def random_y(field: Field, rng: random.Random, *, tail=None, bound: int = 5) -> YElement:
    w = field.random(rng, bound) if rng.random() < 0.6 else field.zero
    return YElement(w, random_series(field, rng, bound=bound, tail=tail))
