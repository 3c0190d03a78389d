"""Exact scalars and univariate polynomials over Q or GF(p).

Scalars over Q are :class:`fractions.Fraction`; scalars over GF(p) are
:class:`Fp`. Polynomials are immutable coefficient tuples, lowest degree
first, with no trailing zero (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction
from typing import Iterable, Optional, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Fp:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Fp(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Fp(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """The rationals (``p == 0``) or the prime field GF(p).

    Calling the field coerces ints, Fractions, residues and scalar text
    (``"a"`` or ``"a/b"``) into canonical scalars.
    """

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def from_name(cls, name: str) -> "Field":
        name = name.strip().lower()
        if name in ("q", "qq", "rationals"):
            return QQ
        if name.startswith("fp:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise ValueError(f"bad field name {name!r}") from None
            return GF(p)
        raise ValueError(f"bad field name {name!r}; use 'q' or 'fp:<p>'")

    @property
    def name(self) -> str:
        return f"fp:{self.p}" if self.p else "q"

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        if self.p:
            if isinstance(x, Fp):
                if x.p != self.p:
                    raise ValueError(f"residue mod {x.p} is not in GF({self.p})")
                return x
            if isinstance(x, int):
                return Fp(x, self.p)
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
                return Fp(x.numerator * pow(x.denominator, -1, self.p), self.p)
            if isinstance(x, str):
                return self.parse(x)
            raise TypeError(f"cannot coerce {x!r} into GF({self.p})")
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def parse(self, text: str):
        text = text.strip()
        try:
            if "/" in text:
                a, b = text.split("/")
                return self(Fraction(int(a), int(b)))
            return self(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {text!r}: {exc}") from None

    def fmt(self, x) -> str:
        return str(x)

    def random(self, rng: random.Random, bound: int = 5, *, fractions: bool = True):
        """Small random scalar; over Q occasionally a fraction."""
        if self.p:
            return Fp(rng.randrange(self.p), self.p)
        num = rng.randint(-bound, bound)
        den = rng.randint(1, 3) if fractions and rng.random() < 0.3 else 1
        return Fraction(num, den)

    def random_nonzero(self, rng: random.Random, bound: int = 5):
        while True:
            k = self.random(rng, bound)
            if k:
                return k

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"


QQ = Field(0)


@functools.lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


class Poly:
    """Dense univariate polynomial over a :class:`Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        c = [field(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, field: Field, coeffs: list) -> "Poly":
        # coeffs already coerced; only trimming needed
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = Poly.__new__(Poly)
        p.field = field
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field: Field, k) -> "Poly":
        return cls(field, [k])

    @classmethod
    def monomial(cls, field: Field, k, e: int) -> "Poly":
        return cls(field, [0] * e + [k])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x):
        acc = self.field.zero
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def _check(self, other: "Poly"):
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly(self.field, [other])

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction, Fp)):
            return NotImplemented
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, y in enumerate(b):
            c[i] = c[i] + y
        return Poly._raw(self.field, c)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Poly, int, Fraction, Fp)):
            return NotImplemented
        if not isinstance(other, Poly):
            k = self.field(other)
            return Poly._raw(self.field, [a * k for a in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, [])
        c = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                c[i + j] = c[i + j] + x * y
        return Poly._raw(self.field, c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lead
        q = [self.field.zero] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            t = r[k] * inv
            if not t:
                continue
            q[k - db] = t
            for i, y in enumerate(other.coeffs):
                r[k - db + i] = r[k - db + i] - t * y
        return Poly._raw(self.field, q), Poly._raw(self.field, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0) or drop the k lowest coefficients (k < 0)."""
        if k >= 0:
            return Poly._raw(self.field, [self.field.zero] * k + list(self.coeffs))
        return Poly._raw(self.field, list(self.coeffs[-k:]))

    def truncate(self, n: int) -> "Poly":
        return Poly._raw(self.field, list(self.coeffs[:n]))

    @property
    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for zero)."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return -1

    def monic(self) -> "Poly":
        if not self:
            return self
        return self * (1 / self.lead)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Fp)):
            return self.coeffs == Poly(self.field, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field!r}, [{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        return format_poly(self.coeffs, "x")


def format_poly(coeffs: Sequence, var: str) -> str:
    """Render coefficients (low to high) as ``x^2 + x - 1`` style text."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        a = coeffs[e]
        if not a:
            continue
        neg = isinstance(a, Fraction) and a < 0
        mag = -a if neg else a
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: monic ``g = gcd(a, b)`` and ``s, t`` with ``s*a + t*b = g``."""
    a._check(b)
    if not a and not b:
        raise ValueError("undefined gcd")
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly.const(F, 1), Poly(F)
    t0, t1 = Poly(F), Poly.const(F, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if not a and not b:
        raise ValueError("undefined gcd")
    while b:
        a, b = b, a % b
    return a.monic()


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.const(base.field, 1) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _irreducible_mod_p(f: Poly) -> bool:
    # Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n.
    n, p = f.degree, f.field.p
    if n == 1:
        return True
    f = f.monic()
    x = Poly.x(f.field)
    powers = {0: x % f}
    h = x % f
    for k in range(1, n + 1):
        h = powmod(h, p, f)
        powers[k] = h
    if powers[n] != x % f:
        return False
    for q in _prime_factors(n):
        g = poly_gcd(powers[n // q] - x, f)
        if g.degree > 0:
            return False
    return True


def _integer_primitive(f: Poly) -> list[int]:
    den = 1
    for a in f.coeffs:
        den = den * a.denominator // _gcd(den, a.denominator)
    ints = [int(a * den) for a in f.coeffs]
    g = 0
    for a in ints:
        g = _gcd(g, a)
    return [a // g for a in ints]


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots of a polynomial over Q (rational-root test)."""
    if f.field.p:
        raise ValueError("rational_roots needs a polynomial over Q")
    ints = _integer_primitive(f)
    roots = []
    v = 0
    while ints[v] == 0:
        v += 1
    if v:
        roots.append(Fraction(0))
    ints = ints[v:]
    if len(ints) == 1:
        return roots
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand not in roots and f(cand) == 0:
                    roots.append(cand)
    return roots


_SMALL_PRIMES = [p for p in range(2, 200) if _is_prime(p)]


def is_irreducible(p: Poly, field: Optional[Field] = None) -> Optional[bool]:
    """Three-valued irreducibility test: ``True``, ``False`` or ``None`` (unknown).

    Exact over prime fields. Over Q it is exact for degree <= 3 and whenever a
    rational root exists; otherwise it reports ``True`` if the polynomial stays
    irreducible of the same degree modulo a small prime, else ``None``.
    """
    if field is not None and field != p.field:
        raise ValueError("polynomial is not over the given field")
    if p.degree < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if p.field.p:
        return _irreducible_mod_p(p)
    if p.degree == 1:
        return True
    if rational_roots(p):
        return False
    if p.degree <= 3:
        return True
    ints = _integer_primitive(p)
    for q in _SMALL_PRIMES:
        if ints[-1] % q == 0:
            continue
        if _irreducible_mod_p(Poly(GF(q), ints)):
            return True
    return None


class FPoly(Poly):
    """An irreducible polynomial with constant term -1 (parameter of a simple module)."""

    __slots__ = ()

    def __init__(self, poly: Poly, *, assume_irreducible: bool = False):
        super().__init__(poly.field, poly.coeffs)
        if self.degree < 1:
            raise ValueError("f must have degree >= 1")
        if self[0] != -1:
            raise ValueError(f"f(0) must be -1, got {self[0]}")
        verdict = is_irreducible(poly)
        if verdict is False:
            raise ValueError(f"{poly} is reducible over {poly.field!r}")
        if verdict is None and not assume_irreducible:
            raise ValueError(
                f"could not certify irreducibility of {poly}; "
                "pass assume_irreducible=True to accept it"
            )


class PPoly(Poly):
    """A polynomial with nonzero constant term."""

    __slots__ = ()

    def __init__(self, poly: Poly):
        super().__init__(poly.field, poly.coeffs)
        if not self[0]:
            raise ValueError(f"p(0) must be nonzero, got {self}")


def require_unit_constant(f: Poly) -> Poly:
    """Check the normalization f(0) = -1 used for division by f(c)."""
    if f.degree < 1 or f[0] != -1:
        raise ValueError(f"expected a polynomial of degree >= 1 with f(0) = -1, got {f}")
    return f


class LaurentPoly:
    """Element of K[x, 1/x] stored as ``x^min_deg * (c0 + c1 x + ...)``."""

    __slots__ = ("field", "min_deg", "coeffs")

    def __init__(self, field: Field, min_deg: int, coeffs: Iterable = ()):
        c = [field(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        lo = 0
        while lo < len(c) and not c[lo]:
            lo += 1
        c = c[lo:]
        self.field = field
        self.min_deg = min_deg + lo if c else 0
        self.coeffs = tuple(c)

    @classmethod
    def from_terms(cls, field: Field, terms: dict) -> "LaurentPoly":
        """From a mapping exponent -> coefficient."""
        terms = {e: k for e, k in terms.items() if k}
        if not terms:
            return cls(field, 0)
        lo, hi = min(terms), max(terms)
        return cls(field, lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def from_poly(cls, p: Poly) -> "LaurentPoly":
        return cls(p.field, 0, p.coeffs)

    def terms(self) -> dict:
        return {self.min_deg + i: a for i, a in enumerate(self.coeffs) if a}

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "LaurentPoly"):
        t = self.terms()
        for e, k in other.terms().items():
            t[e] = t.get(e, self.field.zero) + k
        return LaurentPoly.from_terms(self.field, t)

    def __neg__(self):
        return LaurentPoly(self.field, self.min_deg, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            k = self.field(other)
            return LaurentPoly(self.field, self.min_deg, [a * k for a in self.coeffs])
        p = Poly(self.field, self.coeffs) * Poly(other.field, other.coeffs)
        return LaurentPoly(self.field, self.min_deg + other.min_deg, p.coeffs)

    __rmul__ = __mul__

    def to_poly(self) -> Poly:
        """The associate in K[x] with nonzero constant term."""
        return Poly(self.field, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.field, self.min_deg, self.coeffs) == (other.field, other.min_deg, other.coeffs)

    def __hash__(self):
        return hash((self.field, self.min_deg, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self.min_deg}, [{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, a in sorted(self.terms().items(), reverse=True):
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                parts.append(str(a))
            elif a == 1:
                parts.append(mono)
            else:
                parts.append(f"{a}*{mono}")
        return " + ".join(parts)


def laurent_gcd(items: Sequence[LaurentPoly]) -> PPoly:
    """Generator of the ideal spanned by ``items`` in K[x, 1/x].

    Normalized to a monic polynomial with nonzero constant term.
    """
    polys = [it.to_poly() for it in items if it]
    if not polys:
        raise ValueError("zero ideal")
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
    return PPoly(g.monic())


def random_poly(field: Field, rng: random.Random, degree: int, bound: int = 5) -> Poly:
    return Poly(field, [field.random(rng, bound) for _ in range(degree + 1)])
