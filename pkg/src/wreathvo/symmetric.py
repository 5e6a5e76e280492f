"""Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule.

Kept independent of the vertex-operator code so it can serve as an oracle for
the character tables produced there.
"""

from __future__ import annotations

from functools import lru_cache

from wreathvo.partitions import Partition, partitions


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    padded = tuple(lam) + (0,) * (length - len(lam))
    return tuple(padded[i] + length - 1 - i for i in range(length))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    length = len(beta)
    parts = sorted(beta, reverse=True)
    return tuple(p for p in (parts[i] - (length - 1 - i) for i in range(length)) if p > 0)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    length = len(lam) + k
    beta = _beta_set(lam, length)
    beads = set(beta)
    total = 0
    for b in beta:
        if b - k >= 0 and b - k not in beads:
            # removing a k-rim hook slides bead b to b - k; the height is the
            # number of beads jumped over
            height = sum(1 for c in beta if b - k < c < b)
            new_beta = tuple(b - k if c == b else c for c in beta)
            total += (-1) ** height * mn_character(_from_beta(new_beta), rest)
    return total


def character_table(n: int) -> list[list[int]]:
    """Rows and columns both in the canonical reverse-lex order of partitions(n)."""
    parts = partitions(n)
    return [[mn_character(lam, mu) for mu in parts] for lam in parts]
