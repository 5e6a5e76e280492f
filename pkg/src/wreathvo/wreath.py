"""Class functions on wreath products G_n = G^n x| S_n, stored by conjugacy type.

A conjugacy type is a partition-valued function on the classes of the base
group (see ``partitions``). Element-level machinery is kept for brute-force
cross-checks on small groups only.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

from wreathvo.groups import ClassFn, GroupData, GroupError, XiForm
from wreathvo.partitions import PartFn, big_Z, enumerate_partfn, partfn_to_string, single
from wreathvo.scalar import ONE, ZERO, Cyclo, cyclo


def types(group: GroupData, n: int) -> tuple[PartFn, ...]:
    """Conjugacy types of G_n in canonical order."""
    return enumerate_partfn(group.num_classes, n)


def bar(group: GroupData, rho: PartFn) -> PartFn:
    """rho composed with the inverse-class involution."""
    return tuple(rho[group.inv_class[c]] for c in range(len(rho)))


def Z(group: GroupData, rho: PartFn) -> int:
    return big_Z(rho, group.zeta)


def wreath_order(group: GroupData, n: int) -> int:
    return group.order**n * math.factorial(n)


class WreathClassFn:
    """A class function on G_n; missing types have value 0."""

    __slots__ = ("group", "n", "values")

    def __init__(self, group: GroupData, n: int, values: Mapping[PartFn, object] | None = None):
        self.group = group
        self.n = n
        self.values: dict[PartFn, Cyclo] = {}
        for rho, v in (values or {}).items():
            if sum(map(sum, rho)) != n or len(rho) != group.num_classes:
                raise GroupError(f"type {rho} is not a type of G_{n}")
            v = cyclo(v)
            if v:
                self.values[rho] = v

    def __getitem__(self, rho: PartFn) -> Cyclo:
        return self.values.get(rho, ZERO)

    def _check(self, other: "WreathClassFn") -> None:
        if other.group is not self.group:
            raise GroupError("class functions on different base groups")
        if other.n != self.n:
            raise GroupError(f"class functions on G_{self.n} and G_{other.n}")

    def __add__(self, other: "WreathClassFn") -> "WreathClassFn":
        self._check(other)
        out = dict(self.values)
        for rho, v in other.values.items():
            out[rho] = out.get(rho, ZERO) + v
        return WreathClassFn(self.group, self.n, out)

    def __neg__(self) -> "WreathClassFn":
        return WreathClassFn(self.group, self.n, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: "WreathClassFn") -> "WreathClassFn":
        return self + (-other)

    def __mul__(self, other) -> "WreathClassFn":
        """Pointwise product with another class function, or a scalar multiple."""
        if isinstance(other, WreathClassFn):
            self._check(other)
            return WreathClassFn(
                self.group, self.n, {k: v * other[k] for k, v in self.values.items() if k in other.values}
            )
        s = cyclo(other)
        return WreathClassFn(self.group, self.n, {k: v * s for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WreathClassFn)
            and other.group is self.group
            and other.n == self.n
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.values.items())))

    def to_json(self) -> dict[str, str]:
        return {partfn_to_string(rho): str(self[rho]) for rho in types(self.group, self.n) if rho in self.values}

    def __repr__(self) -> str:
        return f"WreathClassFn({self.group.name}, n={self.n}, {self.to_json()})"


def eta_n(gamma: ClassFn, n: int) -> WreathClassFn:
    """Value prod_c gamma(c)^{l(rho(c))} at type rho (also valid for virtual gamma)."""
    grp = gamma.group
    return WreathClassFn(
        grp, n, {rho: _prod(gamma[c] ** len(lam) for c, lam in enumerate(rho)) for rho in types(grp, n)}
    )


def epsilon_n(gamma: ClassFn, n: int) -> WreathClassFn:
    """Value (-1)^n prod_c (-gamma(c))^{l(rho(c))} at type rho."""
    grp = gamma.group
    sign = -1 if n % 2 else 1
    return WreathClassFn(
        grp,
        n,
        {rho: sign * _prod((-gamma[c]) ** len(lam) for c, lam in enumerate(rho)) for rho in types(grp, n)},
    )


def _prod(values: Iterable[Cyclo]) -> Cyclo:
    out = ONE
    for v in values:
        out = out * v
    return out


def sigma_class(group: GroupData, c: int | ClassFn, n: int) -> WreathClassFn:
    """sigma_n(c): n*zeta_c on the class of one n-cycle with cycle-product in c, 0 elsewhere.

    For a class function gamma, sigma_n(gamma) takes value n*gamma(c) on each such class.
    """
    if n < 1:
        raise ValueError("n must be positive")
    r = group.num_classes
    if isinstance(c, ClassFn):
        return WreathClassFn(group, n, {single(r, k, (n,)): c[k] * n for k in range(r)})
    return WreathClassFn(group, n, {single(r, c, (n,)): n * group.zeta[c]})


def sigma_rho(group: GroupData, rho: PartFn) -> WreathClassFn:
    """Z_rho on the class of type rho and 0 elsewhere."""
    return WreathClassFn(group, sum(map(sum, rho)), {rho: Z(group, rho)})


def weighted_pairing_n(xf: XiForm, f: WreathClassFn, g: WreathClassFn) -> Cyclo:
    """sum_rho Z_rho^{-1} eta_n(xi)(rho) f(rho) g(rho-bar)."""
    f._check(g)
    grp = f.group
    xi = xf.xi
    acc = ZERO
    for rho, fv in f.values.items():
        gv = g[bar(grp, rho)]
        if not gv:
            continue
        w = _prod(xi[c] ** len(lam) for c, lam in enumerate(rho))
        if w:
            acc = acc + w * fv * gv * Fraction(1, Z(grp, rho))
    return acc


def standard_pairing_n(f: WreathClassFn, g: WreathClassFn) -> Cyclo:
    f._check(g)
    grp = f.group
    acc = ZERO
    for rho, fv in f.values.items():
        gv = g[bar(grp, rho)]
        if gv:
            acc = acc + fv * gv * Fraction(1, Z(grp, rho))
    return acc


def _merge(rho: PartFn, pi: PartFn) -> PartFn:
    return tuple(tuple(sorted(a + b, reverse=True)) if b else a for a, b in zip(rho, pi))


def induction_product(f: WreathClassFn, g: WreathClassFn) -> WreathClassFn:
    """Ind from G_n x G_m to G_{n+m}, through the characteristic map.

    ch(f) ch(g) = sum Z_rho^{-1} Z_pi^{-1} f_rho g_pi a'_{-(rho u pi)}, so the
    value at tau is Z_tau times the sum over splittings tau = rho u pi.
    """
    if f.group is not g.group:
        raise GroupError("class functions on different base groups")
    grp = f.group
    acc: dict[PartFn, Cyclo] = defaultdict(lambda: ZERO)
    for rho, fv in f.values.items():
        zr = Z(grp, rho)
        for pi, gv in g.values.items():
            acc[_merge(rho, pi)] += fv * gv * Fraction(1, zr * Z(grp, pi))
    return WreathClassFn(grp, f.n + g.n, {tau: v * Z(grp, tau) for tau, v in acc.items()})


def unit(group: GroupData) -> WreathClassFn:
    """The unit of the ring sum_n R(G_n): the constant 1 on G_0."""
    return WreathClassFn(group, 0, {tuple(() for _ in range(group.num_classes)): 1})


# -- element level -------------------------------------------------------------

class WreathGroup:
    """Explicit elements of G_n for brute-force checks.

    An element is (g, s) with g a tuple of n base-group element indices and s a
    permutation tuple, s[i] being the image of i. Multiplication is
    (g, s)(h, t) = (g * s(h), s t) with s(h)_i = h_{s^{-1}(i)}.
    """

    def __init__(self, group: GroupData, n: int, limit: int = 5000):
        self.group = group
        self.n = n
        if wreath_order(group, n) > limit:
            raise GroupError(f"G_{n} has order {wreath_order(group, n)}, beyond the brute-force limit")
        perms = list(itertools.permutations(range(n)))
        self.elements = [(g, s) for s in perms for g in itertools.product(range(group.order), repeat=n)]
        self.index = {x: i for i, x in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, x, y):
        g, s = x
        h, t = y
        m = self.group.mult
        inv_s = [0] * self.n
        for i, si in enumerate(s):
            inv_s[si] = i
        gs = tuple(m[g[i]][h[inv_s[i]]] for i in range(self.n))
        return gs, tuple(s[t[i]] for i in range(self.n))

    def inverse(self, x):
        g, s = x
        inv = self.group.inverse
        inv_s = [0] * self.n
        for i, si in enumerate(s):
            inv_s[si] = i
        # (g, s)^{-1} = (s^{-1}(g^{-1}), s^{-1})
        return tuple(inv[g[s[i]]] for i in range(self.n)), tuple(inv_s)

    def type_of(self, x) -> PartFn:
        return type_of(self.group, x)

    def conjugacy_classes(self) -> list[list[int]]:
        seen = [False] * self.order
        classes = []
        for i, x in enumerate(self.elements):
            if seen[i]:
                continue
            orbit = {self.index[self.mul(self.mul(y, x), self.inverse(y))] for y in self.elements}
            for j in orbit:
                seen[j] = True
            classes.append(sorted(orbit))
        return classes

    def class_function(self, f: WreathClassFn) -> list[Cyclo]:
        """Values of f on every element."""
        return [f[self.type_of(x)] for x in self.elements]


def type_of(group: GroupData, x) -> PartFn:
    """Conjugacy type: for each cycle (i_1 ... i_k) of s, the class of g_{i_k} ... g_{i_1}."""
    g, s = x
    n = len(s)
    seen = [False] * n
    found: list[list[int]] = [[] for _ in range(group.num_classes)]
    m = group.mult
    for start in range(n):
        if seen[start]:
            continue
        prod = 0
        i = start
        k = 0
        while not seen[i]:
            seen[i] = True
            prod = m[g[i]][prod]  # left-multiply: g_{i_j} ... g_{i_1}
            i = s[i]
            k += 1
        found[group.class_of[prod]].append(k)
    return tuple(tuple(sorted(p, reverse=True)) for p in found)


def element_induction(f: WreathClassFn, g: WreathClassFn, limit: int = 48) -> WreathClassFn:
    """Ind_{G_n x G_m}^{G_{n+m}} (f x g) by summing over conjugates (small groups only)."""
    grp = f.group
    n, m = f.n, g.n
    big = WreathGroup(grp, n + m, limit=limit)
    sub_order = wreath_order(grp, n) * wreath_order(grp, m)
    values: dict[PartFn, Cyclo] = {}
    for x in big.elements:
        tau = big.type_of(x)
        if tau in values:
            continue
        acc = ZERO
        for y in big.elements:
            cx = big.mul(big.mul(y, x), big.inverse(y))
            h, s = cx
            if any(s[i] >= n for i in range(n)):
                continue  # not in the Young subgroup
            left = type_of(grp, (h[:n], s[:n]))
            right = type_of(grp, (h[n:], tuple(p - n for p in s[n:])))
            fv, gv = f[left], g[right]
            if fv and gv:
                acc = acc + fv * gv
        values[tau] = acc * Fraction(1, sub_order)
    return WreathClassFn(grp, n + m, values)


def class_algebra_constants(group: GroupData, n: int, limit: int = 48):
    """Brute-force class multiplication counts of G_n, indexed by canonical types.

    Returns (types, sizes, a) with a[i][j][k] = #{(x, y) : x in C_i, y in C_j, xy = rep(C_k)}.
    """
    wg = WreathGroup(group, n, limit=limit)
    ts = types(group, n)
    pos = {t: i for i, t in enumerate(ts)}
    cls = [pos[wg.type_of(x)] for x in wg.elements]
    r = len(ts)
    sizes = [0] * r
    rep = [None] * r
    for i, c in enumerate(cls):
        sizes[c] += 1
        if rep[c] is None:
            rep[c] = wg.elements[i]
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        z = rep[k]
        for i, x in enumerate(wg.elements):
            y = wg.mul(wg.inverse(x), z)
            a[cls[i]][cls[wg.index[y]]][k] += 1
    return ts, sizes, a
