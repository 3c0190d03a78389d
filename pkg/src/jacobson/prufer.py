"""Prüfer modules: ``M_n^f = R / R f(c)^n`` and their direct limit ``U^f``.

A coset in ``M_n^f`` is stored by its ``G^f``-coordinates ``(g_0, ..., g_{n-1})``,
meaning ``g_0 + g_1 f(c) + ... + g_{n-1} f(c)^(n-1) + R f(c)^n``; this
representative is unique. The connecting map ``psi`` multiplies by a power of
``f(c)``, which shifts coordinates up, so an element of ``U^f`` has a minimal
level at which its lowest coordinate is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .algebra import Element, gen, poly_at_c
from .arith import Field, Poly, poly_xgcd, require_unit_constant
from .division import gf_coordinates
from . import linalg


@dataclass(frozen=True)
class MnElement:
    f: Poly
    n: int
    coords: tuple

    def __post_init__(self):
        require_unit_constant(self.f)
        coords = tuple(self.coords)
        if len(coords) != self.n or self.n < 1:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        for g in coords:
            if g.degree >= self.f.degree:
                raise ValueError(f"coordinate {g} is not in G^f (deg f = {self.f.degree})")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, f: Poly, n: int) -> "MnElement":
        return cls(f, n, (Poly(f.field),) * n)

    @classmethod
    def generator(cls, f: Poly, n: int) -> "MnElement":
        """``1 + R f(c)^n``."""
        return cls(f, n, (Poly.const(f.field, 1),) + (Poly(f.field),) * (n - 1))

    @classmethod
    def from_element(cls, beta: Element, f: Poly, n: int) -> "MnElement":
        """The canonical projection ``R -> M_n^f``."""
        coords, _ = gf_coordinates(beta, f, n)
        return cls(f, n, tuple(coords))

    @classmethod
    def from_vector(cls, f: Poly, n: int, vec: Sequence) -> "MnElement":
        d = f.degree
        return cls(f, n, tuple(Poly(f.field, vec[k * d:(k + 1) * d]) for k in range(n)))

    @property
    def field(self) -> Field:
        return self.f.field

    def vector(self) -> list:
        d = self.f.degree
        return [g[i] for g in self.coords for i in range(d)]

    def as_poly(self) -> Poly:
        """``sum g_k f^k`` in K[x] (degree < n deg f)."""
        acc = Poly(self.field)
        fk = Poly.const(self.field, 1)
        for g in self.coords:
            acc = acc + g * fk
            fk = fk * self.f
        return acc

    def lift(self) -> Element:
        return poly_at_c(self.as_poly())

    def __add__(self, other: "MnElement"):
        self._check(other)
        return MnElement(self.f, self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "MnElement"):
        self._check(other)
        return MnElement(self.f, self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k):
        return MnElement(self.f, self.n, tuple(g * k for g in self.coords))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __bool__(self):
        return any(self.coords)

    def _check(self, other: "MnElement"):
        if other.f != self.f or other.n != self.n:
            raise ValueError("elements live in different modules")

    def __str__(self):
        parts = []
        for k, g in enumerate(self.coords):
            if g:
                gs = str(g).replace("x", "c")
                parts.append(f"({gs})" + ("" if k == 0 else f"*f(c)^{k}" if k > 1 else "*f(c)"))
        body = " + ".join(parts) if parts else "0"
        return f"{body} + R f(c)^{self.n}"


def mn_act(r: Element, m: MnElement) -> MnElement:
    if r.field != m.field:
        raise ValueError("field mismatch")
    coords, _ = gf_coordinates(r * m.lift(), m.f, m.n)
    return MnElement(m.f, m.n, tuple(coords))


def psi(m: MnElement, target_level: int) -> MnElement:
    """``psi_{n,l}``: ``1 + R f^n -> f(c)^(l-n) + R f^l``; shifts coordinates up."""
    if target_level < m.n:
        raise ValueError(f"target level {target_level} below level {m.n}")
    pad = (Poly(m.field),) * (target_level - m.n)
    return MnElement(m.f, target_level, pad + m.coords)


@dataclass(frozen=True)
class UfElement:
    """An element of ``U^f`` stored at its minimal level."""

    f: Poly
    level: int
    rep: MnElement

    @property
    def field(self) -> Field:
        return self.f.field

    @property
    def coords(self) -> tuple:
        return self.rep.coords

    def __bool__(self):
        return bool(self.rep)

    def __add__(self, other: "UfElement"):
        top = max(self.level, other.level)
        return uf_normalize(self.f, top, psi(self.rep, top) + psi(other.rep, top))

    def __neg__(self):
        return UfElement(self.f, self.level, -self.rep)

    def __sub__(self, other: "UfElement"):
        return self + (-other)

    def __mul__(self, k):
        return uf_normalize(self.f, self.level, self.rep * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"[level {self.level}] {self.rep}"


def uf_normalize(f: Poly, level: int, rep: MnElement) -> UfElement:
    """Canonical direct-limit representative: strip zero low coordinates."""
    if rep.n != level or rep.f != f:
        raise ValueError("representative does not match level/f")
    coords = rep.coords
    k = 0
    while k < len(coords) and not coords[k]:
        k += 1
    if k == len(coords):
        return UfElement(f, 1, MnElement.zero(f, 1))
    lvl = level - k
    return UfElement(f, lvl, MnElement(f, lvl, coords[k:]))


def uf_from(m: MnElement) -> UfElement:
    """``psi_n``: the image of ``m`` in ``U^f``."""
    return uf_normalize(m.f, m.n, m)


def alpha(f: Poly, n: int) -> UfElement:
    """The generator ``alpha_{n,f} = psi_n(1 + R f(c)^n)``."""
    return uf_from(MnElement.generator(f, n))


def uf_act(r: Element, u: UfElement) -> UfElement:
    return uf_normalize(u.f, u.level, mn_act(r, u.rep))


def uf_divide_by_fc(u: UfElement) -> UfElement:
    """Some ``v`` with ``f(c) v = u``: the same representative one level up."""
    if not u:
        return u
    lvl = u.level + 1
    return UfElement(u.f, lvl, MnElement(u.f, lvl, u.coords + (Poly(u.field),)))


def solve_linear_in_Mn(a: Element, b: MnElement, max_dim: int = 64) -> Optional[MnElement]:
    """Some ``x`` in ``M_n^f`` with ``a x = b``, or ``None``.

    ``x -> a x`` is K-linear on the ``n deg f``-dimensional space ``M_n^f``;
    its matrix is built on the basis ``c^i f(c)^j`` and solved exactly.
    """
    f, n = b.f, b.n
    dim = n * f.degree
    if dim > max_dim:
        raise ValueError(f"dimension {dim} exceeds the bound {max_dim}")
    A = action_matrix(a, f, n)
    x = linalg.solve(A, b.vector(), b.field)
    if x is None:
        return None
    return MnElement.from_vector(f, n, x)


def action_matrix(r: Element, f: Poly, n: int) -> list[list]:
    """Matrix (columns = images of basis vectors) of ``x -> r x`` on ``M_n^f``."""
    dim = n * f.degree
    cols = []
    for k in range(dim):
        e = MnElement.from_vector(f, n, [1 if t == k else 0 for t in range(dim)])
        cols.append(mn_act(r, e).vector())
    return [[cols[k][row] for k in range(dim)] for row in range(dim)]


def split_power(p: Poly, f: Poly) -> tuple[int, Poly]:
    """``p = f^l * p0`` with ``f`` not dividing ``p0``."""
    l, p0 = 0, p
    while True:
        q, r = divmod(p0, f)
        if r:
            return l, p0
        p0, l = q, l + 1


def extend_hom_to_Uf(p: Poly, f: Poly, image: UfElement) -> UfElement:
    """``Phi(1)`` for the extension to R of ``R p(c) -> U^f, p(c) -> image``.

    With ``p = f^l p0`` and ``beta0 p0 = 1 mod f^(n+l)`` (n = level of the image),
    ``Phi(1)`` is ``beta0(c)`` times the image's representative read at level
    ``n + l``; then ``p(c) Phi(1) = f(c)^l m + R f^(n+l)`` is the image.
    """
    if not p[0]:
        raise ValueError("p(0) must be nonzero")
    if image.f != f:
        raise ValueError("image is not in U^f")
    if not image:
        return image
    l, p0 = split_power(p, f)
    n = image.level
    top = n + l
    g, s, _ = poly_xgcd(p0, f ** top)
    if g.degree != 0:
        raise ValueError(f"gcd(p0, f^{top}) = {g}; f must be irreducible")
    raised = MnElement(f, top, image.coords + (Poly(f.field),) * l)
    phi1 = uf_normalize(f, top, mn_act(poly_at_c(s), raised))
    if uf_act(poly_at_c(p), phi1) != image:
        raise RuntimeError("extension does not restrict to the given map")
    return phi1


# --- brute-force submodule lattice ----------------------------------------

def _batched_rref(M: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Jordan mod p on a stack of matrices (N, rows, cols)."""
    M = M % p
    N, R, Dc = M.shape
    inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    rank = np.zeros(N, dtype=np.int64)
    rows = np.arange(R)
    for col in range(Dc):
        eligible = (M[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = eligible[b].argmax(axis=1)
        rb = rank[b]
        tmp = M[b, rb].copy()
        M[b, rb] = M[b, piv]
        M[b, piv] = tmp
        scale = inv[M[b, rb, col]]
        M[b, rb] = (M[b, rb] * scale[:, None]) % p
        factors = M[b, :, col].copy()
        factors[np.arange(len(b)), rb] = 0
        M[b] = (M[b] - factors[:, :, None] * M[b, rb][:, None, :]) % p
        rank[b] += 1
    return M, rank


def _generator_matrices(f: Poly, n: int) -> list[np.ndarray]:
    F = f.field
    mats = []
    for name in ("c", "c'", "d", "d'"):
        A = action_matrix(gen(F, name), f, n)
        mats.append(np.array([[int(a) for a in row] for row in A], dtype=np.int64))
    return mats


def cyclic_submodules(f: Poly, n: int, *, max_elements: int = 10**6,
                      chunk: int = 4096) -> list[np.ndarray]:
    """All distinct cyclic submodules ``R m`` of ``M_n^f`` over a small prime field.

    Each is returned as a reduced row-echelon basis (rows). ``R m`` is the
    closure of ``span(m)`` under the generators ``c, c', d, d'``.
    """
    F = f.field
    p = F.p
    d = f.degree
    dim = n * d
    if not p or p > 5:
        raise ValueError("lattice enumeration needs GF(p) with p <= 5")
    if dim > 12:
        raise ValueError(f"n * deg f = {dim} exceeds 12")
    total = p ** dim
    if total > max_elements:
        raise ValueError(f"{total} elements exceed the enumeration cap {max_elements}")
    gens = _generator_matrices(f, n)
    seen: dict[bytes, np.ndarray] = {np.zeros((dim, dim), dtype=np.int8).tobytes(): np.zeros((0, dim), dtype=np.int64)}
    for vecs in _projective_points(p, dim, chunk):
        S = np.zeros((len(vecs), dim, dim), dtype=np.int64)
        S[:, 0, :] = vecs
        S, rk = _batched_rref(S, p)
        while True:
            stacked = np.concatenate([S] + [S @ G.T for G in gens], axis=1)
            S2, rk2 = _batched_rref(stacked, p)
            S2 = S2[:, :dim, :]
            if np.array_equal(rk2, rk):
                break
            S, rk = S2, rk2
        for k in range(len(vecs)):
            key = S[k].astype(np.int8).tobytes()
            if key not in seen:
                seen[key] = S[k, :rk[k]].copy()
    return sorted(seen.values(), key=len)


def _projective_points(p: int, dim: int, chunk: int):
    """Nonzero vectors whose first nonzero entry is 1, in batches (R m = R km)."""
    for lead in range(dim):
        tail = dim - lead - 1
        count = p ** tail
        for start in range(0, count, chunk):
            idx = np.arange(start, min(start + chunk, count))
            vecs = np.zeros((len(idx), dim), dtype=np.int64)
            vecs[:, lead] = 1
            if tail:
                vecs[:, lead + 1:] = np.stack(np.unravel_index(idx, (p,) * tail), axis=1)
            yield vecs


def _contains(big: np.ndarray, small: np.ndarray, p: int) -> bool:
    if len(small) == 0:
        return True
    stacked = np.concatenate([big, small])[None]
    _, rk = _batched_rref(stacked, p)
    return int(rk[0]) == len(big)


def is_chain(subspaces: list[np.ndarray], p: int) -> bool:
    """Are the subspaces totally ordered by inclusion?"""
    subs = sorted(subspaces, key=len)
    for a, b in zip(subs, subs[1:]):
        if not _contains(b, a, p):
            return False
    return True


def submodule_chain(f: Poly, n: int, field: Optional[Field] = None) -> list[int]:
    """Sorted set of K-dimensions of the cyclic submodules of ``M_n^f``."""
    if field is not None and field != f.field:
        raise ValueError("f is not over the given field")
    return sorted({len(s) for s in cyclic_submodules(f, n)})


def fc_socle_dimension(f: Poly, n: int) -> int:
    """Dimension of ``{m in M_n^f : f(c) m = 0}``."""
    A = action_matrix(poly_at_c(f), f, n)
    return len(linalg.nullspace(A, f.field, n * f.degree))


def random_mn(f: Poly, n: int, rng, bound: int = 5) -> MnElement:
    F = f.field
    return MnElement.from_vector(f, n, [F.random(rng, bound) for _ in range(n * f.degree)])


def random_uf(f: Poly, max_level: int, rng, bound: int = 5) -> UfElement:
    n = rng.randint(1, max_level)
    return uf_from(random_mn(f, n, rng, bound))

