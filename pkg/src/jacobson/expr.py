"""Expression front-end shared by elements and polynomials.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Names are ``v w c c' d d' X Y`` for ring elements and ``x`` for polynomials;
``c'`` and ``d'`` denote the ghost edges. Division is only allowed by a
scalar. ``1`` is an integer literal and so doubles as the unit.
"""

from __future__ import annotations

import re
from typing import Callable

from .algebra import Element, gen
from .arith import Field, Poly


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*'?)|(\S))")

LPA_NAMES = {"v", "w", "c", "c'", "d", "d'", "X", "Y"}
JACOBSON_NAMES = {"X", "Y"}


def tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    """Recursive descent evaluator, generic over the target algebra."""

    def __init__(self, text: str, field: Field, name_value: Callable[[str, int], object]):
        self.toks = tokenize(text)
        self.k = 0
        self.field = field
        self.name_value = name_value

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, value: str):
        t = self.take()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, got {t[1] or 'end of input'!r}", t[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        val = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", t[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not _is_scalar(rhs):
                    raise ParseError("division is only allowed by a scalar", pos)
                if not rhs:
                    raise ParseError("division by zero", pos)
                val = val * (1 / rhs)
        return val

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "op" and self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", t[2])
            return base ** int(t[1])
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.field(int(val))
        if kind == "name":
            return self.name_value(val, pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def _is_scalar(x) -> bool:
    return not isinstance(x, (Element, Poly))


def parse(text: str, field: Field, presentation: str = "lpa") -> Element:
    """Parse an element of the algebra and return its normal form.

    With ``presentation='jacobson'`` only ``X``, ``Y``, ``1`` and scalars are
    admitted; they are translated by ``X -> c' + d'``, ``Y -> c + d``.
    """
    if presentation not in ("lpa", "jacobson"):
        raise ValueError(f"unknown presentation {presentation!r}")
    allowed = LPA_NAMES if presentation == "lpa" else JACOBSON_NAMES
    cache: dict[str, Element] = {}

    def name_value(name: str, pos: int):
        if name not in allowed:
            raise ParseError(f"unknown generator {name!r}", pos)
        if name not in cache:
            cache[name] = gen(field, name)
        return cache[name]

    val = _Parser(text, field, name_value).parse()
    if _is_scalar(val):
        return Element.scalar(field, val)
    return val


def parse_poly(text: str, field: Field, var: str = "x") -> Poly:
    """Polynomial from ``[c0, c1, ...]`` (low to high) or an expression in ``x``."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError("unterminated coefficient list", len(text))
        body = text[1:-1].strip()
        items = [s for s in body.split(",")] if body else []
        try:
            return Poly(field, [field.parse(s) for s in items])
        except ValueError as exc:
            raise ParseError(str(exc), 0) from None
    xp = Poly.x(field)

    def name_value(name: str, pos: int):
        if name != var:
            raise ParseError(f"unknown variable {name!r}", pos)
        return xp

    val = _Parser(text, field, name_value).parse()
    if _is_scalar(val):
        return Poly.const(field, val)
    return val


def parse_scalar(text: str, field: Field):
    return field.parse(text)

