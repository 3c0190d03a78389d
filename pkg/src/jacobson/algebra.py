"""Canonical-form arithmetic in the Leavitt path algebra of the Toeplitz graph.

The graph has a loop ``c`` at ``v`` and an edge ``d`` from ``v`` to the sink
``w``. Its Leavitt path algebra is isomorphic to the Jacobson algebra
``K<X, Y | XY = 1>`` via ``X -> c' + d'`` and ``Y -> c + d`` (a trailing
``'`` marks a ghost edge, i.e. ``c' = c*``).

Basis monomials fall into four sectors, keyed by their (left, right) vertex:

====== =================== ======
sector monomial            vertices
====== =================== ======
A(i,j) c^i c'^j            (v, v)
B(i)   c^i d               (v, w)
C(j)   d' c'^j             (w, v)
D      w                   (w, w)
====== =================== ======

``A(0,0) = v`` and ``1 = v + w``.
"""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple, Optional

from .arith import Field, LaurentPoly, Poly

_RANK = {"D": 0, "C": 1, "B": 2, "A": 3}


class Monomial(NamedTuple):
    sector: str
    i: int = 0
    j: int = 0

    @property
    def star_weight(self) -> int:
        """Number of ghost ``c'`` factors (0 for B and D)."""
        return self.j if self.sector in "AC" else 0

    @property
    def right_vertex(self) -> str:
        return "v" if self.sector in "AC" else "w"

    def sort_key(self):
        return (_RANK[self.sector], self.i, self.j)

    def __str__(self):
        return format_monomial(self)


def A(i: int = 0, j: int = 0) -> Monomial:
    return Monomial("A", i, j)


def B(i: int = 0) -> Monomial:
    return Monomial("B", i, 0)


def C(j: int = 0) -> Monomial:
    return Monomial("C", 0, j)


D = Monomial("D", 0, 0)


def _cpow(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def format_monomial(m: Monomial) -> str:
    s, i, j = m
    if s == "D":
        return "w"
    if s == "B":
        return "d" if i == 0 else f"{_cpow('c', i)}*d"
    if s == "C":
        return "d'" if j == 0 else "d'*" + _cpow("c'", j)
    if i == 0 and j == 0:
        return "v"
    parts = []
    if i:
        parts.append(_cpow("c", i))
    if j:
        parts.append(_cpow("c'", j))
    return "*".join(parts)


def _mono_mul(m1: Monomial, m2: Monomial):
    """Structure constants: list of (monomial, sign) with sign in {+1, -1}."""
    s1, i, j = m1
    s2, k, l = m2
    if s1 == "A":
        if s2 == "A":
            return [(Monomial("A", i + k - j, l), 1)] if j <= k else [(Monomial("A", i, j - k + l), 1)]
        if s2 == "B":
            return [(Monomial("B", i + k - j, 0), 1)] if j <= k else []
        return []
    if s1 == "B":
        if s2 == "C":
            return [(Monomial("A", i, l), 1), (Monomial("A", i + 1, l + 1), -1)]
        if s2 == "D":
            return [(m1, 1)]
        return []
    if s1 == "C":
        if s2 == "A":
            return [(Monomial("C", 0, j - k + l), 1)] if k <= j else []
        if s2 == "B":
            return [(D, 1)] if j == k else []
        return []
    # s1 == "D"
    if s2 == "C":
        return [(m2, 1)]
    if s2 == "D":
        return [(D, 1)]
    return []


class Element:
    """A finite K-linear combination of canonical basis monomials.

    Immutable; arithmetic always returns normalized elements.
    """

    __slots__ = ("field", "_terms")

    def __init__(self, field: Field, terms: Optional[dict] = None):
        self.field = field
        t = {}
        if terms:
            for m, k in terms.items():
                k = field(k)
                if k:
                    t[m] = k
        self._terms = t

    @classmethod
    def _raw(cls, field: Field, terms: dict) -> "Element":
        e = cls.__new__(cls)
        e.field = field
        e._terms = {m: k for m, k in terms.items() if k}
        return e

    @classmethod
    def zero(cls, field: Field) -> "Element":
        return cls._raw(field, {})

    @classmethod
    def one(cls, field: Field) -> "Element":
        return cls._raw(field, {A(0, 0): field.one, D: field.one})

    @classmethod
    def mono(cls, field: Field, m: Monomial, k=1) -> "Element":
        return cls(field, {m: k})

    @classmethod
    def scalar(cls, field: Field, k) -> "Element":
        return cls.one(field) * k

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in the canonical order (D < C < B < A, then indices)."""
        return sorted(self._terms.items(), key=lambda mk: mk[0].sort_key())

    def coeff(self, m: Monomial):
        return self._terms.get(m, self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "Element"):
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def _coerce(self, other) -> Optional["Element"]:
        if isinstance(other, Element):
            self._check(other)
            return other
        try:
            return Element.scalar(self.field, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._terms)
        for m, k in other._terms.items():
            t[m] = t[m] + k if m in t else k
        return Element._raw(self.field, t)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.field, {m: -k for m, k in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Element):
            k = self.field(other)
            return Element._raw(self.field, {m: a * k for m, a in self._terms.items()})
        self._check(other)
        t: dict = {}
        for m1, k1 in self._terms.items():
            for m2, k2 in other._terms.items():
                for m, sign in _mono_mul(m1, m2):
                    k = k1 * k2 if sign > 0 else -(k1 * k2)
                    t[m] = t[m] + k if m in t else k
        return Element._raw(self.field, t)

    def __rmul__(self, other):
        # scalar * element
        k = self.field(other)
        return Element._raw(self.field, {m: a * k for m, a in self._terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a ring element")
        result = Element.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, frozenset(self._terms.items())))

    def part(self, pred) -> "Element":
        """Sub-sum of the terms whose monomial satisfies ``pred``."""
        return Element._raw(self.field, {m: k for m, k in self._terms.items() if pred(m)})

    def max_index(self) -> int:
        return max((max(m.i, m.j) for m in self._terms), default=0)

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        return format_element(self)


def mono_mul(m1: Monomial, m2: Monomial, field: Field) -> Element:
    """Product of two basis monomials as an :class:`Element`."""
    t = {}
    for m, sign in _mono_mul(m1, m2):
        t[m] = field(sign)
    return Element(field, t)


def multiply(a: Element, b: Element) -> Element:
    return a * b


def format_element(e: Element) -> str:
    """Deterministic text in the shared expression grammar.

    ``k*v + k*w`` is folded into the scalar ``k`` (i.e. ``k*1``).
    """
    F = e.field
    items = e.items()
    kv, kw = e.coeff(A(0, 0)), e.coeff(D)
    parts: list[tuple[object, str]] = []
    if kv and kv == kw:
        parts.append((kv, ""))
        items = [(m, k) for m, k in items if m not in (A(0, 0), D)]
    for m, k in items:
        parts.append((k, format_monomial(m)))
    if not parts:
        return "0"
    out = []
    for k, mono in parts:
        neg = not F.p and k < 0
        mag = -k if neg else k
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


# --- named elements -------------------------------------------------------

def gen(field: Field, name: str) -> Element:
    """Generator by name: ``v w c c' d d' X Y 1``."""
    if name == "1":
        return Element.one(field)
    if name == "X":
        return Element(field, {A(0, 1): 1, C(0): 1})
    if name == "Y":
        return Element(field, {A(1, 0): 1, B(0): 1})
    table = {"v": A(0, 0), "w": D, "c": A(1, 0), "c'": A(0, 1), "d": B(0), "d'": C(0)}
    if name not in table:
        raise KeyError(name)
    return Element.mono(field, table[name])


def poly_at_c(g: Poly) -> Element:
    """``g(c) = g_0 * 1 + g_1 c + ... + g_m c^m`` (constant term against ``1 = v + w``)."""
    F = g.field
    t = {A(i, 0): a for i, a in enumerate(g.coeffs) if a}
    if g[0]:
        t[D] = g[0]
    return Element._raw(F, t)


def poly_at_c_v(g: Poly) -> Element:
    """``g|_v(c) = v * g(c)``: the constant term sits against ``v`` only."""
    return Element._raw(g.field, {A(i, 0): a for i, a in enumerate(g.coeffs) if a})


def as_poly_at_c(e: Element) -> Optional[Poly]:
    """Inverse of :func:`poly_at_c` on its image, else ``None``."""
    F = e.field
    coeffs = {}
    for m, k in e._terms.items():
        if m.sector == "A" and m.j == 0:
            coeffs[m.i] = k
        elif m != D:
            return None
    if e.coeff(D) != coeffs.get(0, F.zero):
        return None
    top = max(coeffs, default=-1)
    return Poly(F, [coeffs.get(i, 0) for i in range(top + 1)])


# --- Jacobson presentation ------------------------------------------------

def jacobson_words(e: Element) -> dict[tuple[int, int], object]:
    """Coordinates of ``e`` in the Jacobson basis ``Y^a X^b``.

    Uses ``c^i c'^j = Y^(i+1) X^(j+1)``, ``c^i d = Y^(i+1) - Y^(i+2) X``,
    ``d' c'^j = X^(j+1) - Y X^(j+2)`` and ``w = 1 - Y X``.
    """
    F = e.field
    out: dict[tuple[int, int], object] = {}

    def add(a, b, k):
        out[(a, b)] = out.get((a, b), F.zero) + k

    for m, k in e._terms.items():
        s, i, j = m
        if s == "A":
            add(i + 1, j + 1, k)
        elif s == "B":
            add(i + 1, 0, k)
            add(i + 2, 1, -k)
        elif s == "C":
            add(0, j + 1, k)
            add(1, j + 2, -k)
        else:
            add(0, 0, k)
            add(1, 1, -k)
    return {ab: k for ab, k in out.items() if k}


def to_jacobson(e: Element) -> str:
    """Render ``e`` as a polynomial in the Jacobson generators X, Y."""
    F = e.field
    words = sorted(jacobson_words(e).items(), key=lambda t: (t[0][0] + t[0][1], t[0]))
    if not words:
        return "0"
    out = []
    for (a, b), k in words:
        mono = "*".join(p for p in (_cpow("Y", a) if a else "", _cpow("X", b) if b else "") if p)
        neg = not F.p and k < 0
        mag = -k if neg else k
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


# --- the socle J and the quotient R/J = K[x, 1/x] --------------------------

def laurent_image(e: Element) -> LaurentPoly:
    """Image in ``R/J = K[x, 1/x]``: ``c^i c'^j -> x^(i-j)``, other sectors -> 0."""
    t: dict = {}
    for m, k in e._terms.items():
        if m.sector == "A":
            ex = m.i - m.j
            t[ex] = t[ex] + k if ex in t else k
    return LaurentPoly.from_terms(e.field, t)


def socle_membership(e: Element) -> bool:
    return not laurent_image(e)


def idempotent_ei(i: int, field: Field) -> Element:
    """``e_i = c^i d d' c'^i = A(i,i) - A(i+1,i+1)``."""
    return Element(field, {A(i, i): 1, A(i + 1, i + 1): -1})


def socle_decompose(e: Element) -> tuple[Element, list[tuple[int, Element]]]:
    """Split ``e`` in J along ``J = Rw + sum_i R e_i``.

    Returns ``(e*w, [(i, e*e_i), ...])`` with only nonzero components.
    """
    if not socle_membership(e):
        raise ValueError("not in socle")
    F = e.field
    rw_part = e * gen(F, "w")
    # e * c^N c'^N vanishes once N exceeds every index of e
    top = e.max_index() + 1
    comps = []
    for i in range(top + 1):
        part = e * idempotent_ei(i, F)
        if part:
            comps.append((i, part))
    rebuilt = rw_part
    for _, part in comps:
        rebuilt = rebuilt + part
    if rebuilt != e:
        raise RuntimeError("socle decomposition failed to reconstruct its input")
    return rw_part, comps


# --- random elements ------------------------------------------------------

def random_monomial(rng: random.Random, max_index: int = 8) -> Monomial:
    s = rng.choice("AAABCD")
    if s == "A":
        return A(rng.randint(0, max_index), rng.randint(0, max_index))
    if s == "B":
        return B(rng.randint(0, max_index))
    if s == "C":
        return C(rng.randint(0, max_index))
    return D


def random_element(field: Field, rng: random.Random, *, max_index: int = 8,
                   max_terms: int = 5, bound: int = 5) -> Element:
    n = rng.randint(1, max_terms)
    t = {}
    for _ in range(n):
        t[random_monomial(rng, max_index)] = field.random_nonzero(rng, bound)
    return Element(field, t)


def monomials_up_to(bound: int) -> Iterable[Monomial]:
    """All basis monomials with indices <= ``bound``."""
    yield D
    for j in range(bound + 1):
        yield C(j)
    for i in range(bound + 1):
        yield B(i)
    for i in range(bound + 1):
        for j in range(bound + 1):
            yield A(i, j)
