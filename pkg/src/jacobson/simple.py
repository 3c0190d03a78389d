"""The simple modules: ``V^f`` (at the loop) and ``Rw`` (at the sink).

``V^f`` is ``K' = K[x]/(f)`` with ``c`` acting as multiplication by the class
``xbar`` of ``x`` and ``c'`` by its inverse; ``d, d', w`` act as zero.
``Rw`` is the left ideal with basis ``w, d, c d, c^2 d, ...``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

from .algebra import B, D, Element
from .arith import Field, Poly, powmod, require_unit_constant
from .linalg import rank


@functools.lru_cache(maxsize=4096)
def xbar_power(f: Poly, e: int) -> Poly:
    """Residue of ``xbar^e`` modulo ``f``; negative ``e`` uses ``xbar^-1 = g(xbar)``
    where ``f = x*g - 1``."""
    if e >= 0:
        return powmod(Poly.x(f.field), e, f)
    g = (f + 1).shift(-1)
    return powmod(g, -e, f)


@dataclass(frozen=True)
class VfElement:
    """``residue(xbar) * c^inf`` in ``V^f``."""

    f: Poly
    residue: Poly

    def __post_init__(self):
        require_unit_constant(self.f)
        object.__setattr__(self, "residue", self.residue % self.f)

    @classmethod
    def basis(cls, f: Poly, i: int) -> "VfElement":
        return cls(f, Poly.monomial(f.field, 1, i))

    @property
    def field(self) -> Field:
        return self.f.field

    def _check(self, other: "VfElement"):
        if other.f != self.f:
            raise ValueError(f"f mismatch: {self.f} vs {other.f}")

    def __add__(self, other: "VfElement"):
        self._check(other)
        return VfElement(self.f, self.residue + other.residue)

    def __sub__(self, other: "VfElement"):
        self._check(other)
        return VfElement(self.f, self.residue - other.residue)

    def __neg__(self):
        return VfElement(self.f, -self.residue)

    def __mul__(self, other):
        # K'-multiplication, or scaling by a K-scalar
        if isinstance(other, VfElement):
            self._check(other)
            return VfElement(self.f, self.residue * other.residue)
        return VfElement(self.f, self.residue * other)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.residue)

    def coords(self) -> list:
        return [self.residue[i] for i in range(self.f.degree)]

    def __str__(self):
        return f"({self.residue.__str__().replace('x', 'xbar')})*c^inf"


def rho(beta: Element, f: Poly) -> VfElement:
    """``beta * c^inf``: ``c^i c'^j -> xbar^(i-j)``; B, C, D monomials -> 0."""
    require_unit_constant(f)
    by_exp: dict = {}
    for m, k in beta.terms.items():
        if m.sector == "A":
            e = m.i - m.j
            by_exp[e] = by_exp.get(e, beta.field.zero) + k
    acc = Poly(f.field)
    for e, k in by_exp.items():
        if k:
            acc = acc + xbar_power(f, e) * k
    return VfElement(f, acc)


def act_Vf(r: Element, m: VfElement) -> VfElement:
    if r.field != m.field:
        raise ValueError("field mismatch")
    return rho(r, m.f) * m


def annihilator_check(r: Element, f: Poly) -> bool:
    """Does ``r`` kill all of ``V^f``? (Equivalently ``r`` lies in ``R f(c)``.)"""
    by_rho = not rho(r, f)
    by_basis = all(not act_Vf(r, VfElement.basis(f, i)) for i in range(f.degree))
    if by_rho != by_basis:
        raise RuntimeError("rho-membership and basis action disagree")
    return by_rho


@dataclass(frozen=True)
class RwElement:
    """``w_coeff * w + d_poly(c) * d`` in the simple left ideal ``Rw = Rd``."""

    w_coeff: object
    d_poly: Poly

    @classmethod
    def zero(cls, field: Field) -> "RwElement":
        return cls(field.zero, Poly(field))

    @property
    def field(self) -> Field:
        return self.d_poly.field

    def to_element(self) -> Element:
        t = {B(i): a for i, a in enumerate(self.d_poly.coeffs) if a}
        if self.w_coeff:
            t[D] = self.w_coeff
        return Element(self.field, t)

    @classmethod
    def from_element(cls, e: Element) -> "RwElement":
        coeffs = {}
        for m, k in e.terms.items():
            if m.sector == "B":
                coeffs[m.i] = k
            elif m.sector != "D":
                raise ValueError(f"{e} is not in Rw")
        top = max(coeffs, default=-1)
        return cls(e.coeff(D), Poly(e.field, [coeffs.get(i, 0) for i in range(top + 1)]))

    def __add__(self, other: "RwElement"):
        return RwElement(self.w_coeff + other.w_coeff, self.d_poly + other.d_poly)

    def __bool__(self):
        return bool(self.w_coeff) or bool(self.d_poly)

    def __str__(self):
        return str(self.to_element())


def rw_act(r: Element, m: RwElement) -> RwElement:
    return RwElement.from_element(r * m.to_element())


@dataclass(frozen=True)
class SolutionReport:
    solution: RwElement
    kernel_dim: int


def solve_poly_c_in_Rw(p: Poly, b: RwElement) -> Optional[SolutionReport]:
    """Solve ``p(c) x = b`` in ``Rw``; ``None`` when there is no solution.

    With ``x = k w + h(c) d`` the equation splits into ``p(0) k = b.w_coeff`` and
    ``p h = b.d_poly`` in K[x].
    """
    if not p:
        raise ValueError("p must be nonzero")
    F = p.field
    h, rem = divmod(b.d_poly, p)
    if rem:
        return None
    p0 = p[0]
    if p0:
        return SolutionReport(RwElement(b.w_coeff / p0, h), 0)
    if b.w_coeff:
        return None
    return SolutionReport(RwElement(F.zero, h), 1)


def simplicity_probe(f: Poly, field: Optional[Field] = None) -> bool:
    """Brute force: every nonzero vector of ``V^f`` generates ``V^f``.

    The submodule generated by ``m`` is the span of its orbit under ``c`` and
    ``c'``; only small prime fields (p <= 7, deg f <= 3) are allowed.
    """
    F = field or f.field
    if F != f.field:
        raise ValueError("f is not over the given field")
    if not F.p or F.p > 7 or f.degree > 3:
        raise ValueError("simplicity_probe needs GF(p), p <= 7, deg f <= 3")
    require_unit_constant(f)
    n = f.degree
    up, down = xbar_power(f, 1), xbar_power(f, -1)
    for vec in itertools.product(range(F.p), repeat=n):
        if not any(vec):
            continue
        m = VfElement(f, Poly(F, vec))
        span = [m.coords()]
        frontier = [m]
        # closure of the orbit; dimension stops growing after n rounds
        for _ in range(n):
            nxt = []
            for u in frontier:
                for g in (up, down):
                    y = VfElement(f, u.residue * g)
                    nxt.append(y)
                    span.append(y.coords())
            frontier = nxt
            if rank(span, F) == n:
                break
        if rank(span, F) != n:
            return False
    return True
