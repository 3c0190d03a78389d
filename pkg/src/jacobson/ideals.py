"""Classification of finitely generated left ideals.

A left ideal ``I`` either lies in the socle ``J`` (all generators have zero
Laurent image) or ``I + J = R p(c)`` where ``p`` generates the ideal of
Laurent images. In the second case ``I = R p(c)`` exactly when ``J`` is
contained in ``I`` (case 1); otherwise ``I`` is a proper summand of
``R p(c)`` (case 2).

Membership in a left ideal has no general algorithm here, so case 1 is only
certified, either exactly (a single generator of the form ``k p(c)``) or by
finding ``p(c)``, or all of ``w, d', d'c', ..., d'c'^B``, as explicit
combinations ``sum r_k g_k`` with multipliers of index at most ``B``. Case 2
is certified when every generator kills ``w`` on the right (then ``I w = 0``
while ``w w = w``).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .algebra import C, D, Element, as_poly_at_c, laurent_image, monomials_up_to, poly_at_c, socle_decompose
from .arith import Poly, laurent_gcd
from .division import right_divide

CONTAINS_SOCLE = "contains_socle"
SUMMAND_CASE = "summand_case"
INSIDE_SOCLE = "inside_socle"
DECIDED = "decided"
UNDECIDED = "case1_or_2_undecided"


@dataclass
class IdealClassification:
    case: str
    status: str
    p: Optional[Poly] = None
    # socle targets (-1 for w, j for d'c'^j) not certified to lie in I
    socle_complement_indices: list[int] = dc_field(default_factory=list)
    components: list = dc_field(default_factory=list)
    reason: str = ""


def _vector_space(gens: Sequence[Element], bound: int):
    """Row-reduced basis of ``span{m g : m monomial of index <= bound, g in gens}``."""
    F = gens[0].field
    mults = [Element.mono(F, m) for m in monomials_up_to(bound)]
    pivots: dict = {}  # pivot monomial -> reduced row (dict), lead coeff 1
    for g in gens:
        for m in mults:
            _insert(pivots, dict((m * g).terms))
    return pivots


def _reduce(pivots: dict, row: dict) -> dict:
    row = dict(row)
    while row:
        lead = max(row, key=lambda t: t.sort_key())
        piv = pivots.get(lead)
        if piv is None:
            return row
        k = row[lead]
        for t, a in piv.items():
            nv = row.get(t, 0) - k * a
            if nv:
                row[t] = nv
            else:
                row.pop(t, None)
    return row


def _insert(pivots: dict, row: dict):
    row = _reduce(pivots, row)
    if not row:
        return
    lead = max(row, key=lambda t: t.sort_key())
    inv = 1 / row[lead]
    pivots[lead] = {t: a * inv for t, a in row.items()}


def in_left_ideal_bounded(target: Element, pivots: dict) -> bool:
    return not _reduce(pivots, dict(target.terms))


def classify_ideal(gens: Sequence[Element], bound: int = 8) -> IdealClassification:
    if not gens:
        raise ValueError("need at least one generator")
    F = gens[0].field
    images = [laurent_image(g) for g in gens]
    if all(not im for im in images):
        comps = [socle_decompose(g) for g in gens]
        return IdealClassification(INSIDE_SOCLE, DECIDED, components=comps,
                                   reason="all Laurent images vanish")
    p = laurent_gcd([im for im in images if im])
    pc = poly_at_c(p)
    targets = [(-1, Element.mono(F, D))] + [(j, Element.mono(F, C(j))) for j in range(bound + 1)]

    # a single generator k*q(c) with q(0) != 0: I = R p(c) exactly
    nonzero = [g for g in gens if g]
    if len(nonzero) == 1:
        q = as_poly_at_c(nonzero[0])
        if q is not None and q[0]:
            if right_divide(pc, q) is None or right_divide(Element.mono(F, D), q) is None:
                raise RuntimeError("J is not inside R q(c)")
            return IdealClassification(CONTAINS_SOCLE, DECIDED, p=p,
                                       reason="generator is k*p(c); w = w p(c)/p(0) lies in I")

    if all(not (g * Element.mono(F, D)) for g in gens):
        return IdealClassification(SUMMAND_CASE, DECIDED, p=p, socle_complement_indices=[-1],
                                   reason="every generator kills w, so w is not in I")

    pivots = _vector_space(gens, bound)
    if in_left_ideal_bounded(pc, pivots):
        return IdealClassification(CONTAINS_SOCLE, DECIDED, p=p,
                                   reason=f"p(c) found in I with multipliers of index <= {bound}")
    missing = [j for j, t in targets if not in_left_ideal_bounded(t, pivots)]
    if not missing:
        return IdealClassification(CONTAINS_SOCLE, DECIDED, p=p,
                                   reason=f"w and d'c'^j (j <= {bound}) found in I")
    return IdealClassification(SUMMAND_CASE, UNDECIDED, p=p, socle_complement_indices=missing,
                               reason=f"socle targets not reached with multipliers of index <= {bound}")
