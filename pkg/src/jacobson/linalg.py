"""Exact Gauss-Jordan elimination over a :class:`~jacobson.arith.Field`."""

from __future__ import annotations

from typing import Optional, Sequence

from .arith import Field


def rref(rows: Sequence[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[field(a) for a in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(M)) if M[k][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col]
        M[r] = [a * inv for a in M[r]]
        for k in range(len(M)):
            if k != r and M[k][col]:
                t = M[k][col]
                M[k] = [a - t * b for a, b in zip(M[k], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], field: Field) -> int:
    return len(rref(rows, field)[1])


def solve(A: Sequence[Sequence], b: Sequence, field: Field) -> Optional[list]:
    """Some ``x`` with ``A x = b``, or ``None`` if the system is inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, field)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for row, col in zip(R, pivots):
        x[col] = row[n]
    return x


def nullspace(A: Sequence[Sequence], field: Field, ncols: Optional[int] = None) -> list[list]:
    """Basis of ``{x : A x = 0}``."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    R, pivots = rref(A, field) if A else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        x = [field.zero] * n
        x[fc] = field.one
        for row, pc in zip(R, pivots):
            x[pc] = -row[fc]
        basis.append(x)
    return basis
