"""Exact dense linear algebra over Cyclo entries (small matrices only)."""

from __future__ import annotations

from typing import Sequence

from wreathvo.scalar import ONE, ZERO, Cyclo


def matmul(a: Sequence[Sequence[Cyclo]], b: Sequence[Sequence[Cyclo]]) -> list[list[Cyclo]]:
    cols = len(b[0])
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = ZERO
            for x, brow in zip(row, b):
                if x and brow[j]:
                    acc = acc + x * brow[j]
            new.append(acc)
        out.append(new)
    return out


def matvec(a: Sequence[Sequence[Cyclo]], v: Sequence[Cyclo]) -> list[Cyclo]:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def rref(rows: Sequence[Sequence[Cyclo]]) -> tuple[list[list[Cyclo]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Cyclo]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Cyclo]]) -> list[list[Cyclo]]:
    """A basis of {v : rows . v = 0}."""
    ncols = len(rows[0])
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis
