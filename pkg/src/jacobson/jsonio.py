"""JSON encodings of elements, module elements and reports.

Scalars are strings (``"3"``, ``"-1/2"``) so rationals survive untouched;
polynomials are low-first coefficient lists.
"""

from __future__ import annotations

from typing import Any

from .algebra import Element, Monomial
from .arith import Field, Poly
from .ideals import IdealClassification
from .prufer import MnElement, UfElement, uf_from
from .series import RationalSeries
from .simple import RwElement
from .ymodule import YElement


def scalar_to_json(field: Field, k) -> str:
    return field.fmt(k)


def poly_to_json(p: Poly) -> list[str]:
    return [p.field.fmt(a) for a in p.coeffs]


def poly_from_json(field: Field, data) -> Poly:
    return Poly(field, [field.parse(str(a)) for a in data])


def element_to_json(e: Element) -> dict:
    return {
        "field": e.field.name,
        "terms": [
            {"sector": m.sector, "i": m.i, "j": m.j, "coeff": e.field.fmt(k)}
            for m, k in e.items()
        ],
    }


def element_from_json(data: dict) -> Element:
    F = Field.from_name(data["field"])
    return Element(F, {Monomial(t["sector"], t["i"], t["j"]): F.parse(t["coeff"]) for t in data["terms"]})


def rw_to_json(m: RwElement) -> dict:
    return {"field": m.field.name, "w": m.field.fmt(m.w_coeff), "poly": poly_to_json(m.d_poly)}


def mn_to_json(m: MnElement) -> dict:
    return {
        "field": m.field.name,
        "f": poly_to_json(m.f),
        "n": m.n,
        "coords": [poly_to_json(g) for g in m.coords],
    }


def mn_from_json(data: dict) -> MnElement:
    F = Field.from_name(data["field"])
    f = poly_from_json(F, data["f"])
    return MnElement(f, data["n"], tuple(poly_from_json(F, g) for g in data["coords"]))


def uf_to_json(u: UfElement) -> dict:
    out = mn_to_json(u.rep)
    out["kind"] = "U^f"
    return out


def uf_from_json(data: dict) -> UfElement:
    return uf_from(mn_from_json(data))


def y_to_json(y: YElement) -> dict:
    s = y.series
    return {
        "field": y.field.name,
        "w": y.field.fmt(y.w_coeff),
        "poly": poly_to_json(s.poly_part),
        "num": poly_to_json(s.num),
        "den": poly_to_json(s.den),
    }


def y_from_json(data: dict) -> YElement:
    F = Field.from_name(data.get("field", "q"))
    series = RationalSeries(
        poly_from_json(F, data.get("poly", [])),
        poly_from_json(F, data.get("num", [])),
        poly_from_json(F, data.get("den", ["1"])),
    )
    return YElement(F.parse(str(data.get("w", "0"))), series)


def classification_to_json(c: IdealClassification) -> dict[str, Any]:
    out: dict[str, Any] = {"case": c.case, "status": c.status, "reason": c.reason}
    if c.p is not None:
        out["p"] = poly_to_json(c.p)
    if c.case != "inside_socle":
        out["socle_complement_indices"] = c.socle_complement_indices
    else:
        out["components"] = [
            {"w_part": element_to_json(wp), "e_i_parts": [{"i": i, "part": element_to_json(e)} for i, e in parts]}
            for wp, parts in c.components
        ]
    return out
