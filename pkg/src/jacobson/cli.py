"""Command-line front-end: ``python -m jacobson <command> ...``.

Elements are written in the shared grammar (``c'`` and ``d'`` for the ghost
edges), polynomials as expressions in ``x`` or as ``[c0, c1, ...]``.
Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .algebra import Element, poly_at_c, to_jacobson
from .arith import Field, Poly, format_poly, require_unit_constant
from .division import divide, gf_coordinates
from .expr import parse, parse_poly, parse_scalar
from .ideals import classify_ideal
from .jsonio import (
    classification_to_json, element_to_json, mn_to_json, poly_to_json, rw_to_json, uf_to_json,
    y_from_json, y_to_json,
)
from .prufer import MnElement, extend_hom_to_Uf, mn_act, solve_linear_in_Mn, uf_act, uf_from
from .series import RationalSeries
from .simple import RwElement, VfElement, act_Vf, rw_act, solve_poly_c_in_Rw
from .verify import SUITES, run_suite
from .ymodule import YElement, essential_witness, extend_hom_from_J, solve_pc_in_Y, y_act

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default="q", help="q (rationals) or fp:<p>")
    p.add_argument("--pres", choices=("lpa", "jacobson"), default="lpa",
                   help="input presentation for algebra elements")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def _cpoly(p: Poly) -> str:
    return format_poly(p.coeffs, "c")


class _Out:
    def __init__(self, args):
        self.args = args

    def emit(self, text: str, data):
        if self.args.json:
            print(json.dumps(data, indent=2, sort_keys=True))
        else:
            print(text)


def _field(args) -> Field:
    try:
        return Field.from_name(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _elem(args, text: str) -> Element:
    return parse(text, _field(args), args.pres)


def _poly(args, text: str) -> Poly:
    return parse_poly(text, _field(args))


def _rw(args, text: str) -> RwElement:
    try:
        return RwElement.from_element(_elem(args, text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _fpoly(args, text: str) -> Poly:
    f = _poly(args, text)
    try:
        return require_unit_constant(f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _ppoly(args, text: str) -> Poly:
    p = _poly(args, text)
    if not p or not p[0]:
        raise UsageError(f"p = {p} must satisfy p(0) != 0")
    return p


def _y(args) -> YElement:
    F = _field(args)
    if args.y_json:
        data = json.loads(args.y_json)
        data.setdefault("field", F.name)
        return y_from_json(data)
    series = RationalSeries(_poly(args, args.poly), _poly(args, args.num), _poly(args, args.den))
    return YElement(parse_scalar(args.w, F), series)


def _show_element(out: _Out, e: Element, args):
    text = str(e)
    if args.pres == "jacobson":
        text = f"{text}\n= {to_jacobson(e)}"
    out.emit(text, element_to_json(e))


# --- commands ---------------------------------------------------------------

def cmd_normalize(args, out):
    _show_element(out, _elem(args, args.expr), args)


def cmd_multiply(args, out):
    acc = Element.one(_field(args))
    for t in args.exprs:
        acc = acc * _elem(args, t)
    _show_element(out, acc, args)


def cmd_divide(args, out):
    beta = _elem(args, args.expr)
    f = _fpoly(args, args.f)
    if args.n == 1:
        q, r = divide(beta, f)
        out.emit(f"q = {q}\nr = {_cpoly(r)}",
                 {"quotient": element_to_json(q), "remainder": poly_to_json(r)})
        return
    coords, tail = gf_coordinates(beta, f, args.n)
    lines = [f"g_{k} = {_cpoly(g)}" for k, g in enumerate(coords)] + [f"tail = {tail}"]
    out.emit("\n".join(lines), {"coords": [poly_to_json(g) for g in coords], "tail": element_to_json(tail)})


def cmd_act(args, out):
    r = _elem(args, args.expr)
    if args.module == "vf":
        if not args.f:
            raise UsageError("--f is required for --module vf")
        f = _fpoly(args, args.f)
        m = VfElement(f, _poly(args, args.element))
        res = act_Vf(r, m)
        out.emit(str(res), {"f": poly_to_json(f), "residue": poly_to_json(res.residue)})
    else:
        res = rw_act(r, _rw(args, args.element))
        out.emit(str(res), rw_to_json(res))


def cmd_solve_rw(args, out):
    p = _poly(args, args.p)
    if not p:
        raise UsageError("p must be nonzero")
    rep = solve_poly_c_in_Rw(p, _rw(args, args.b))
    if rep is None:
        out.emit("NoSolution", {"solution": None})
        return
    out.emit(f"x = {rep.solution}\nkernel_dim = {rep.kernel_dim}",
             {"solution": rw_to_json(rep.solution), "kernel_dim": rep.kernel_dim})


def cmd_prufer(args, out):
    f = _fpoly(args, args.f)
    n = args.n
    if args.action == "act":
        m = MnElement.from_element(_elem(args, args.element), f, n)
        res = mn_act(_elem(args, args.expr), m)
        out.emit(str(res), mn_to_json(res))
    elif args.action == "solve":
        b = MnElement.from_element(_elem(args, args.element), f, n)
        x = solve_linear_in_Mn(_elem(args, args.expr), b)
        if x is None:
            out.emit("NoSolution", {"solution": None})
        else:
            out.emit(f"x = {x}", {"solution": mn_to_json(x)})
    else:
        p = _ppoly(args, args.p)
        try:
            image = uf_from(MnElement.from_element(_elem(args, args.element), f, n))
            phi1 = extend_hom_to_Uf(p, f, image)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        ok = uf_act(poly_at_c(p), phi1) == image
        out.emit(f"Phi(1) = {phi1}\ncheck p(c) Phi(1) = image: {ok}",
                 {"phi1": uf_to_json(phi1), "image": uf_to_json(image), "verified": ok})


def cmd_y(args, out):
    F = _field(args)
    if args.action == "extend-j":
        series = RationalSeries(_poly(args, args.poly), _poly(args, args.num), _poly(args, args.den))
        phi1 = extend_hom_from_J(parse_scalar(args.w, F), series)
        out.emit(f"Phi(1) = {phi1}", y_to_json(phi1))
        return
    y = _y(args)
    if args.action == "act":
        res = y_act(_elem(args, args.expr), y)
        out.emit(str(res), y_to_json(res))
    elif args.action == "solve":
        z = solve_pc_in_Y(_ppoly(args, args.p), y)
        out.emit(f"z = {z}", y_to_json(z))
    else:
        if not y:
            raise UsageError("the zero element has no witness")
        r, image = essential_witness(y)
        out.emit(f"r = {r}\nr y = {image}", {"r": element_to_json(r), "image": rw_to_json(image)})


def cmd_classify(args, out):
    gens = [_elem(args, t) for t in args.generators]
    cl = classify_ideal(gens, bound=args.bound)
    lines = [f"case: {cl.case}", f"status: {cl.status}"]
    if cl.p is not None:
        lines.append(f"p = {cl.p}   (I + J = R p(c))")
    if cl.socle_complement_indices:
        names = ["w" if i < 0 else f"d'c'^{i}" for i in cl.socle_complement_indices]
        lines.append("not certified in I: " + ", ".join(names))
    for idx, (wp, parts) in enumerate(cl.components):
        comp = [f"[w] {wp}"] + [f"[e_{i}] {e}" for i, e in parts]
        lines.append(f"generator {idx}: " + "; ".join(comp))
    lines.append(f"reason: {cl.reason}")
    out.emit("\n".join(lines), classification_to_json(cl))


def cmd_verify(args, out) -> int:
    total, parts = run_suite(args.suite, seed=args.seed, size=args.size)
    text = "\n".join([p.summary() for p in parts] + [total.summary()])
    if total.failures and not args.json:
        text += "\n" + "\n".join(json.dumps(f) for f in total.failures[:20])
    out.emit(text, {"total": total.to_json(), "checks": [p.to_json() for p in parts]})
    return EXIT_OK if total.ok else EXIT_VERIFY


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="jacobson", description="Exact computation in K<X,Y | XY = 1>.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="canonical form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("multiply", parents=[common], help="product of expressions")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("divide", parents=[common], help="beta = q f(c) + r")
    p.add_argument("expr")
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, default=1, help="number of G^f coordinates")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("act", parents=[common], help="action on V^f or Rw")
    p.add_argument("--module", choices=("vf", "rw"), required=True)
    p.add_argument("--f")
    p.add_argument("expr")
    p.add_argument("element", help="V^f: residue polynomial in x; Rw: expression in w, c^i d")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("solve-rw", parents=[common], help="solve p(c) x = b in Rw")
    p.add_argument("--p", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_solve_rw)

    pr = sub.add_parser("prufer", help="M_n^f and U^f").add_subparsers(dest="action", required=True)
    for action, hint in (("act", "r * m in M_n^f"), ("solve", "some x with r x = m in M_n^f")):
        p = pr.add_parser(action, parents=[common], help=hint)
        p.add_argument("--f", required=True)
        p.add_argument("--n", type=int, default=1)
        p.add_argument("expr", help="the algebra element r")
        p.add_argument("element", help="element of R, projected into M_n^f")
        p.set_defaults(func=cmd_prufer)
    p = pr.add_parser("extend", parents=[common], help="extend R p(c) -> U^f to R")
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--p", required=True, help="the ideal R p(c)")
    p.add_argument("element", help="image of p(c): element of R, projected into M_n^f")
    p.set_defaults(func=cmd_prufer)

    ys = sub.add_parser("y", help="the series module Y").add_subparsers(dest="action", required=True)
    for action, hint in (("act", "r y"), ("solve", "z with p(c) z = y"), ("witness", "r with r y in Rw nonzero"),
                         ("extend-j", "Phi(1) for a hom J -> Y")):
        p = ys.add_parser(action, parents=[common], help=hint)
        if action == "act":
            p.add_argument("expr", help="the algebra element r")
        if action == "solve":
            p.add_argument("--p", required=True)
        p.add_argument("--w", default="0", help="coefficient k_-1 of w")
        p.add_argument("--poly", default="0", help="polynomial part of the d-stream")
        p.add_argument("--num", default="0", help="numerator of the rational tail")
        p.add_argument("--den", default="1", help="denominator of the rational tail")
        if action != "extend-j":
            p.add_argument("--y-json", help="YElement as JSON instead of --w/--poly/--num/--den")
        p.set_defaults(func=cmd_y)

    p = sub.add_parser("classify-ideal", parents=[common], help="classify the left ideal generated by the inputs")
    p.add_argument("generators", nargs="+")
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = _Out(args)
    try:
        code = args.func(args, out)
    except (UsageError, ValueError) as exc:  # ParseError and JSON errors are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
