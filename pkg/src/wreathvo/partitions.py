"""Partitions and partition-valued functions.

A partition is a weakly decreasing tuple of positive ints. A partition-valued
function on an ordered label set X is a tuple of partitions, one per label, in
label order; labels themselves live with the caller (class indices or irrep
indices of a base group).
"""

from __future__ import annotations

import math
import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple  # tuple[int, ...]
PartFn = tuple  # tuple[Partition, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last."""
    return tuple(_partitions(n, n))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def multiplicities(lam: Partition) -> dict[int, int]:
    """The exponent form 1^{m_1} 2^{m_2} ... as {i: m_i}."""
    return dict(Counter(lam))


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    """prod_i i^{m_i} m_i!, the centralizer order of cycle type lam in S_n."""
    out = 1
    for i, m in Counter(lam).items():
        out *= i**m * math.factorial(m)
    return out


def size(rho: PartFn) -> int:
    return sum(sum(p) for p in rho)


def big_Z(rho: PartFn, zeta: Sequence[int]) -> int:
    """prod_c z_{rho(c)} zeta_c^{l(rho(c))}: centralizer order of type rho in the wreath product."""
    out = 1
    for lam, zc in zip(rho, zeta):
        out *= z_lambda(lam) * zc ** len(lam)
    return out


@lru_cache(maxsize=None)
def enumerate_partfn(num_labels: int, n: int) -> tuple[PartFn, ...]:
    """All partition-valued functions of total size n on num_labels labels.

    Canonical order: compare the first label's partition first, larger size
    before smaller and reverse-lex within a size, then the next label, and so on.
    """
    if num_labels == 0:
        return ((),) if n == 0 else ()
    out = []
    for s in range(n, -1, -1):
        tails = enumerate_partfn(num_labels - 1, n - s)
        for lam in partitions(s):
            for tail in tails:
                out.append((lam,) + tail)
    return tuple(out)


def empty_partfn(num_labels: int) -> PartFn:
    return ((),) * num_labels


def single(num_labels: int, index: int, lam: Partition) -> PartFn:
    """The function taking lam at one label and the empty partition elsewhere."""
    return tuple(tuple(lam) if i == index else () for i in range(num_labels))


def add_part(rho: PartFn, index: int, part: int) -> PartFn:
    lam = tuple(sorted(rho[index] + (part,), reverse=True))
    return rho[:index] + (lam,) + rho[index + 1 :]


def remove_part(rho: PartFn, index: int, part: int) -> PartFn:
    parts = list(rho[index])
    parts.remove(part)
    return rho[:index] + (tuple(parts),) + rho[index + 1 :]


def permute_labels(rho: PartFn, perm: Sequence[int]) -> PartFn:
    """rho composed with a label permutation: result[c] = rho[perm[c]]."""
    return tuple(rho[perm[c]] for c in range(len(rho)))


def partition_count_series(num_labels: int, order: int) -> list[int]:
    """Coefficients of prod_x prod_k (1 - q^k)^{-1} up to q^order."""
    coeffs = [1] + [0] * order
    for _ in range(num_labels):
        for k in range(1, order + 1):
            for i in range(k, order + 1):
                coeffs[i] += coeffs[i - k]
    return coeffs


# -- text form ------------------------------------------------------------

def partfn_to_string(rho: PartFn, prefix: str = "c") -> str:
    """``"c0:[3,1];c1:[2]"`` with empty entries omitted; ``"-"`` for the empty function."""
    items = [f"{prefix}{i}:[{','.join(map(str, lam))}]" for i, lam in enumerate(rho) if lam]
    return ";".join(items) if items else "-"


_ENTRY = re.compile(r"^([A-Za-z]*)(\d+):\[([\d,\s]*)\]$")


def parse_partfn(text: str, num_labels: int) -> PartFn:
    text = text.strip()
    out: list[Partition] = [()] * num_labels
    if text in ("", "-"):
        return tuple(out)
    for item in text.split(";"):
        m = _ENTRY.match(item.strip())
        if not m:
            raise ValueError(f"malformed partition-function entry {item!r}")
        idx = int(m.group(2))
        if idx >= num_labels:
            raise ValueError(f"label index {idx} out of range for {num_labels} labels")
        parts = tuple(int(p) for p in m.group(3).split(",") if p.strip())
        if any(p <= 0 for p in parts):
            raise ValueError(f"non-positive part in {item!r}")
        out[idx] = tuple(sorted(parts, reverse=True))
    return tuple(out)


def z_inverse(lam: Partition) -> Fraction:
    return Fraction(1, z_lambda(lam))
