"""Character tables of the binary tetrahedral, octahedral and icosahedral groups.

Each column is keyed by (element order, class size, trace in the natural
2-dimensional representation). Where that key is shared by several classes the
loader in ``groups`` tries the possible assignments and keeps the one passing
the exact consistency checks. Entries are symbols resolved by ``value``:
``w`` = zeta_3, ``r`` = sqrt 2, ``p`` = golden ratio.
"""

from __future__ import annotations

from wreathvo.scalar import Cyclo

_W = Cyclo.zeta(3)
_R2 = Cyclo.zeta(8) + Cyclo.zeta(8, 7)
_PHI = 1 + Cyclo.zeta(5) + Cyclo.zeta(5, 4)

_SYMBOLS = {
    "w": _W,
    "w2": _W * _W,
    "r": _R2,
    "p": _PHI,
    "q": 1 - _PHI,  # the Galois conjugate of p
}


def value(sym) -> Cyclo:
    if isinstance(sym, int):
        return Cyclo.rational(sym)
    sign = 1
    if sym.startswith("-"):
        sign, sym = -1, sym[1:]
    return _SYMBOLS[sym] * sign


# (order, size, trace symbol) per column, then rows with the degree first.
BINARY_TETRAHEDRAL = {
    "columns": [(1, 1, 2), (2, 1, -2), (4, 6, 0), (6, 4, 1), (6, 4, 1), (3, 4, -1), (3, 4, -1)],
    "rows": [
        [1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, "w", "w2", "w2", "w"],
        [1, 1, 1, "w2", "w", "w", "w2"],
        [2, -2, 0, 1, 1, -1, -1],
        [2, -2, 0, "w", "w2", "-w2", "-w"],
        [2, -2, 0, "w2", "w", "-w", "-w2"],
        [3, 3, -1, 0, 0, 0, 0],
    ],
    "natural": 3,
}

BINARY_OCTAHEDRAL = {
    "columns": [(1, 1, 2), (2, 1, -2), (4, 6, 0), (4, 12, 0), (8, 6, "r"), (8, 6, "-r"), (6, 8, 1), (3, 8, -1)],
    "rows": [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1, -1, 1, 1],
        [2, 2, 2, 0, 0, 0, -1, -1],
        [3, 3, -1, 1, -1, -1, 0, 0],
        [3, 3, -1, -1, 1, 1, 0, 0],
        [2, -2, 0, 0, "r", "-r", 1, -1],
        [2, -2, 0, 0, "-r", "r", 1, -1],
        [4, -4, 0, 0, 0, 0, -1, 1],
    ],
    "natural": 5,
}

BINARY_ICOSAHEDRAL = {
    "columns": [
        (1, 1, 2), (2, 1, -2), (4, 30, 0), (6, 20, 1), (3, 20, -1),
        (10, 12, "p"), (10, 12, "q"), (5, 12, "-q"), (5, 12, "-p"),
    ],
    "rows": [
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
        [3, 3, -1, 0, 0, "p", "q", "q", "p"],
        [3, 3, -1, 0, 0, "q", "p", "p", "q"],
        [4, 4, 0, 1, 1, -1, -1, -1, -1],
        [5, 5, 1, -1, -1, 0, 0, 0, 0],
        [2, -2, 0, 1, -1, "p", "q", "-q", "-p"],
        [2, -2, 0, 1, -1, "q", "p", "-p", "-q"],
        [4, -4, 0, -1, 1, 1, 1, -1, -1],
        [6, -6, 0, 0, 0, -1, -1, 1, 1],
    ],
    "natural": 5,
}
