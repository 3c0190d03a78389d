"""Division by ``f(c)``: remainders in ``G^f`` and exact right quotients.

Every ``beta`` in R is uniquely ``q * f(c) + r`` with ``r`` a polynomial in
``c`` of degree ``< deg f`` (an element of ``G^f``). The remainder is read
off the action on ``c^inf``; the quotient comes from :func:`right_divide`.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .algebra import A, Element, poly_at_c, poly_at_c_v
from .arith import Poly, require_unit_constant
from .simple import VfElement, rho

__all__ = [
    "DivisionResult", "rho", "sigma", "divide", "right_divide",
    "gf_coordinates", "in_ideal",
]


class DivisionResult(NamedTuple):
    quotient: Element
    remainder: Poly  # element of G^f, as a polynomial in c


def sigma(val: VfElement, f: Poly) -> Poly:
    """``xbar^i c^inf -> c^i``: the residue polynomial, read as an element of ``G^f``."""
    if val.f != f:
        raise ValueError("f mismatch")
    return val.residue


def right_divide(gamma: Element, p: Poly) -> Optional[Element]:
    """The unique ``q`` with ``q * p(c) = gamma``, or ``None`` if ``gamma`` is not in ``R p(c)``.

    Works for any ``p`` with ``p(0) != 0``. Right-multiplying a monomial ending
    at ``w`` by ``p(c)`` just scales it by ``p(0)``; for monomials ending at
    ``v`` every ``c^k`` (k >= 1) strictly lowers the number of ``c'`` factors.
    So the B/D part is solved directly, the A/C part is peeled off by
    descending star weight, and what is left at weight 0 is a polynomial
    division in K[c].
    """
    F = gamma.field
    if p.field != F:
        raise ValueError("field mismatch")
    p0 = p[0]
    if not p0:
        raise ValueError("p(0) must be nonzero")
    inv0 = 1 / p0
    pc = poly_at_c(p)

    q = gamma.part(lambda m: m.sector in "BD") * inv0
    rest = gamma.part(lambda m: m.sector in "AC")
    top = max((m.star_weight for m in rest.terms), default=0)
    for j in range(top, 0, -1):
        layer = rest.part(lambda m, j=j: m.star_weight == j)
        if not layer:
            continue
        qj = layer * inv0
        q = q + qj
        rest = rest - qj * pc
    if rest.part(lambda m: m.star_weight > 0):
        raise RuntimeError("star-weight elimination left weight > 0 terms")

    c0 = rest.part(lambda m: m.sector == "C")
    q = q + c0 * inv0
    a0 = rest.part(lambda m: m.sector == "A")
    top_i = max((m.i for m in a0.terms), default=-1)
    P = Poly(F, [a0.coeff(A(i, 0)) for i in range(top_i + 1)])
    h, r = divmod(P, p)
    if r:
        return None
    return q + poly_at_c_v(h)


def divide(beta: Element, f: Poly) -> DivisionResult:
    """Division algorithm by ``f(c)`` for ``f(0) = -1``."""
    require_unit_constant(f)
    r = sigma(rho(beta, f), f)
    q = right_divide(beta - poly_at_c(r), f)
    if q is None or q * poly_at_c(f) + poly_at_c(r) != beta:
        raise RuntimeError(f"division algorithm failed on {beta} by {f}")
    return DivisionResult(q, r)


def gf_coordinates(beta: Element, f: Poly, n: int) -> tuple[list[Poly], Element]:
    """``beta = g_0 + g_1 f(c) + ... + g_{n-1} f(c)^(n-1) + tail * f(c)^n`` with ``g_i`` in ``G^f``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coords = []
    cur = beta
    for _ in range(n):
        cur, g = divide(cur, f)
        coords.append(g)
    return coords, cur


def in_ideal(beta: Element, f: Poly, n: int = 1) -> bool:
    """Is ``beta`` in ``R f(c)^n``?"""
    coords, _ = gf_coordinates(beta, f, n)
    return not any(coords)
