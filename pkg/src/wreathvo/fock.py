"""The symmetric algebra S_G in power sums, Heisenberg action, bilinear form and ch.

A vector is a dict mapping a monomial to its coefficient. A monomial
a_{-rho} = prod_i prod_{k in rho(i)} a_{-k}(gamma_i) is keyed by the
partition-valued function rho on irreducible labels. Coefficients are ints,
Fractions or Cyclo values; rational work stays in plain Python numbers and
everything is coerced to Cyclo at the API boundary.
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from wreathvo.groups import ClassFn, GroupData, Report, XiForm
from wreathvo.partitions import PartFn, partitions, z_lambda
from wreathvo.scalar import ZERO, Cyclo, cyclo
from wreathvo.symmetric import mn_character
from wreathvo.wreath import WreathClassFn, Z, bar, epsilon_n, eta_n, types

Terms = dict  # PartFn -> scalar


# -- raw term-dict helpers -------------------------------------------------------

def _add_into(acc: dict, key, value) -> None:
    if not value:
        return
    v = acc.get(key)
    if v is None:
        acc[key] = value
    else:
        v = v + value
        if v:
            acc[key] = v
        else:
            del acc[key]


def _merge(rho: PartFn, pi: PartFn) -> PartFn:
    return tuple(tuple(sorted(a + b, reverse=True)) if b else a for a, b in zip(rho, pi))


def _mul_terms(u: Mapping, v: Mapping) -> dict:
    out: dict = {}
    for a, x in u.items():
        for b, y in v.items():
            _add_into(out, _merge(a, b), x * y)
    return out


def _scale_terms(u: Mapping, s) -> dict:
    if not s:
        return {}
    return {k: v * s for k, v in u.items()}


def _lin_comb(pairs: Iterable[tuple[Mapping, object]]) -> dict:
    out: dict = {}
    for u, s in pairs:
        if s:
            for k, v in u.items():
                _add_into(out, k, v * s)
    return out


def _as_number(x):
    """Demote rational Cyclo values to Fraction/int for fast inner loops."""
    if isinstance(x, Cyclo) and x.is_rational():
        f = x.to_fraction()
        return f.numerator if f.denominator == 1 else f
    return x


def _norm(rho: PartFn) -> int:
    return sum(map(sum, rho))


# -- the vector type -------------------------------------------------------------

class SymVec:
    """An element of S_G: a finite combination of power-sum monomials."""

    __slots__ = ("num_labels", "terms")

    def __init__(self, num_labels: int, terms: Mapping | None = None):
        self.num_labels = num_labels
        self.terms: dict = {}
        for k, v in (terms or {}).items():
            if len(k) != num_labels:
                raise ValueError("monomial has the wrong number of labels")
            _add_into(self.terms, k, v)

    @classmethod
    def vacuum(cls, num_labels: int) -> "SymVec":
        return cls(num_labels, {((),) * num_labels: 1})

    @classmethod
    def monomial(cls, rho: PartFn, coeff=1) -> "SymVec":
        return cls(len(rho), {tuple(tuple(sorted(p, reverse=True)) for p in rho): coeff})

    def __add__(self, other: "SymVec") -> "SymVec":
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return SymVec(self.num_labels, out)

    def __sub__(self, other: "SymVec") -> "SymVec":
        return self + other * -1

    def __neg__(self) -> "SymVec":
        return self * -1

    def __mul__(self, other) -> "SymVec":
        if isinstance(other, SymVec):
            return SymVec(self.num_labels, _mul_terms(self.terms, other.terms))
        return SymVec(self.num_labels, _scale_terms(self.terms, _as_number(other)))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymVec):
            return NotImplemented
        if other.num_labels != self.num_labels or self.terms.keys() != other.terms.keys():
            return False
        return all(cyclo(v) == cyclo(other.terms[k]) for k, v in self.terms.items())

    def __hash__(self):  # pragma: no cover - mutable-looking value type
        raise TypeError("SymVec is not hashable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, rho: PartFn) -> Cyclo:
        return cyclo(self.terms.get(rho, 0))

    def degrees(self) -> set[int]:
        return {_norm(k) for k in self.terms}

    def homogeneous_part(self, d: int) -> "SymVec":
        return SymVec(self.num_labels, {k: v for k, v in self.terms.items() if _norm(k) == d})

    def to_string(self) -> str:
        return terms_to_string(self.terms)

    def __repr__(self) -> str:
        return f"SymVec({self.to_string()!r})"


def monomial_to_string(rho: PartFn) -> str:
    """``"a[-2](g1)^1 a[-1](g0)^3"``; the vacuum is ``"1"``. Larger modes first, then labels."""
    counts = defaultdict(int)
    for i, lam in enumerate(rho):
        for k in lam:
            counts[(k, i)] += 1
    if not counts:
        return "1"
    keys = sorted(counts, key=lambda t: (-t[0], t[1]))
    return " ".join(f"a[-{k}](g{i})^{counts[(k, i)]}" for k, i in keys)


def _monomial_order(rho: PartFn):
    return (_norm(rho), monomial_to_string(rho))


def terms_to_string(terms: Mapping) -> str:
    if not terms:
        return "0"
    parts = []
    for rho in sorted(terms, key=_monomial_order):
        parts.append(f"({cyclo(terms[rho])}) {monomial_to_string(rho)}")
    return " + ".join(parts)


_FACTOR = re.compile(r"a\[-(\d+)\]\(g(\d+)\)\^(\d+)")


def parse_monomial(text: str, num_labels: int) -> PartFn:
    text = text.strip()
    parts: list[list[int]] = [[] for _ in range(num_labels)]
    if text not in ("1", ""):
        pos = 0
        for m in _FACTOR.finditer(text):
            if text[pos : m.start()].strip():
                raise ValueError(f"malformed monomial {text!r}")
            k, i, e = int(m.group(1)), int(m.group(2)), int(m.group(3))
            if i >= num_labels or k <= 0:
                raise ValueError(f"bad factor in monomial {text!r}")
            parts[i].extend([k] * e)
            pos = m.end()
        if text[pos:].strip():
            raise ValueError(f"malformed monomial {text!r}")
    return tuple(tuple(sorted(p, reverse=True)) for p in parts)


def _split_terms(text: str) -> list[str]:
    """Split at top-level " + " separators that start a new "(coefficient)"."""
    out, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + (", i):
            out.append(text[start:i])
            start = i + 3
            i += 3
            continue
        i += 1
    out.append(text[start:])
    return [t.strip() for t in out]


def parse_symvec(text: str, num_labels: int) -> SymVec:
    """Inverse of ``SymVec.to_string``."""
    text = text.strip()
    if text == "0":
        return SymVec(num_labels)
    out: dict = {}
    for term in _split_terms(text):
        if not term.startswith("(") or ")" not in term:
            raise ValueError(f"malformed vector term {term!r}")
        close = term.index(")")
        _add_into(out, parse_monomial(term[close + 1 :], num_labels), cyclo(term[1:close]))
    return SymVec(num_labels, out)


# -- Heisenberg action -------------------------------------------------------------

def coords_of(label, xf: XiForm | None = None, num_labels: int | None = None) -> tuple:
    """Irreducible coordinates of a label: an int (gamma_i), a ClassFn, or a coordinate sequence."""
    if isinstance(label, ClassFn):
        return tuple(_as_number(x) for x in label.irreducible_coordinates())
    if isinstance(label, int):
        if num_labels is None:
            num_labels = xf.group.num_classes
        return tuple(1 if i == label else 0 for i in range(num_labels))
    return tuple(_as_number(x) for x in label)


def form_row(xf: XiForm, u: Sequence) -> tuple:
    """(<gamma, gamma_j>_xi)_j for gamma with coordinates u."""
    A = xf.A_int if xf.integral else xf.A
    r = len(A)
    out = []
    for j in range(r):
        acc = 0
        for i in range(r):
            if u[i] and A[i][j]:
                acc = acc + u[i] * _as_number(A[i][j])
        out.append(acc)
    return tuple(out)


def pair_coords(xf: XiForm, u: Sequence, v: Sequence):
    row = form_row(xf, u)
    acc = 0
    for a, b in zip(row, v):
        if a and b:
            acc = acc + a * b
    return acc


class HeisOp:
    """a_m(gamma) with gamma given by irreducible coordinates."""

    __slots__ = ("mode", "coords")

    def __init__(self, mode: int, coords: Sequence):
        self.mode = mode
        self.coords = tuple(_as_number(c) for c in coords)

    def __repr__(self) -> str:
        return f"HeisOp({self.mode}, {self.coords})"


def heis_terms(mode: int, coords: Sequence, terms: Mapping, xf: XiForm, lattice_pairing=None) -> dict:
    """a_mode(gamma) on raw terms.

    Negative modes multiply, positive modes are the derivation
    a_m(gamma) a_{-m}(gamma_j) -> m <gamma, gamma_j>_xi, and mode 0 acts as zero on
    S_G (the lattice module passes ``lattice_pairing`` to make it d_gamma).
    """
    out: dict = {}
    if mode < 0:
        k = -mode
        for rho, v in terms.items():
            for i, c in enumerate(coords):
                if c:
                    lam = tuple(sorted(rho[i] + (k,), reverse=True))
                    _add_into(out, rho[:i] + (lam,) + rho[i + 1 :], v * c)
        return out
    if mode == 0:
        return out
    row = form_row(xf, coords)
    for rho, v in terms.items():
        for j, lam in enumerate(rho):
            if not row[j]:
                continue
            mult = lam.count(mode)
            if mult:
                parts = list(lam)
                parts.remove(mode)
                _add_into(out, rho[:j] + (tuple(parts),) + rho[j + 1 :], v * (mult * mode) * row[j])
    return out


def apply_heis(op: HeisOp, v: SymVec, xf: XiForm) -> SymVec:
    return SymVec(v.num_labels, heis_terms(op.mode, op.coords, v.terms, xf))


def class_coords(group: GroupData, c: int) -> tuple:
    """a_m(c) = sum_gamma gamma(c^{-1}) a_m(gamma): coordinates gamma(c^{-1})."""
    ci = group.inv_class[c]
    return tuple(_as_number(group.char_table[i][ci]) for i in range(group.num_classes))


def class_op(group: GroupData, mode: int, c: int) -> HeisOp:
    return HeisOp(mode, class_coords(group, c))


def gamma_from_classes(group: GroupData, i: int) -> dict[int, object]:
    """a_m(gamma_i) = sum_c zeta_c^{-1} gamma_i(c) a_m(c), as {c: coefficient}."""
    return {
        c: _as_number(group.char_table[i][c] * Fraction(1, group.zeta[c]))
        for c in range(group.num_classes)
        if group.char_table[i][c]
    }


def basis_change_class(group: GroupData, mode: int, c: int) -> HeisOp:
    return class_op(group, mode, c)


# -- bilinear form -----------------------------------------------------------------

def _mode_counts(rho: PartFn) -> dict[int, tuple]:
    r = len(rho)
    counts: dict[int, list[int]] = {}
    for i, lam in enumerate(rho):
        for k in lam:
            counts.setdefault(k, [0] * r)[i] += 1
    return {k: tuple(v) for k, v in counts.items()}


class _Contractor:
    """Pairings of power-sum monomials by summing over matchings of equal modes."""

    def __init__(self, xf: XiForm):
        A = xf.A_int if xf.integral else [[_as_number(a) for a in row] for row in xf.A]
        self.A = A
        self.r = len(A)
        self._cache: dict = {}

    def matchings(self, u: tuple, v: tuple):
        """sum over bijections between label multisets u and v of prod A_ij."""
        key = (u, v)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        r = self.r
        A = self.A
        total = 0
        cols = list(v)

        def rec(i, acc):
            nonlocal total
            while i < r and u[i] == 0:
                i += 1
            if i == r:
                total = total + acc
                return
            # distribute u[i] items of row i over the columns
            def spread(j, left, acc2):
                if j == r:
                    if left == 0:
                        rec(i + 1, acc2)
                    return
                a = A[i][j]
                top = min(left, cols[j])
                for t in range(top + 1):
                    if t and not a:
                        break
                    cols[j] -= t
                    term = acc2 if t == 0 else acc2 * a**t * Fraction(1, math.factorial(t))
                    spread(j + 1, left - t, term)
                    cols[j] += t

            spread(0, u[i], acc)

        if sum(u) == sum(v):
            rec(0, 1)
            fact = 1
            for x in u:
                fact *= math.factorial(x)
            for x in v:
                fact *= math.factorial(x)
            total = total * fact
        else:
            total = 0
        if isinstance(total, Fraction) and total.denominator == 1:
            total = total.numerator
        self._cache[key] = total
        return total

    def pair_monomials(self, rho: PartFn, pi: PartFn):
        cu, cv = _mode_counts(rho), _mode_counts(pi)
        if cu.keys() != cv.keys():
            return 0
        acc = 1
        for k, u in cu.items():
            v = cv[k]
            if sum(u) != sum(v):
                return 0
            w = self.matchings(u, v)
            if not w:
                return 0
            acc = acc * w * k ** sum(u)
        return acc


_CONTRACTORS: dict[int, tuple[XiForm, _Contractor]] = {}


def contractor(xf: XiForm) -> _Contractor:
    hit = _CONTRACTORS.get(id(xf))
    if hit is None or hit[0] is not xf:
        hit = (xf, _Contractor(xf))
        _CONTRACTORS[id(xf)] = hit
    return hit[1]


def _signature(rho: PartFn) -> tuple:
    return tuple(sorted((k for lam in rho for k in lam), reverse=True))


def inner_terms(u: Mapping, v: Mapping, xf: XiForm):
    con = contractor(xf)
    by_sig: dict = defaultdict(list)
    for b, y in v.items():
        by_sig[_signature(b)].append((b, y))
    acc = 0
    for a, x in u.items():
        for b, y in by_sig.get(_signature(a), ()):
            w = con.pair_monomials(a, b)
            if w:
                acc = acc + x * y * w
    return acc


def inner_product(u: SymVec, v: SymVec, xf: XiForm) -> Cyclo:
    """The bilinear form with <1, 1> = 1 and a_n(gamma)* = a_{-n}(gamma)."""
    return cyclo(inner_terms(u.terms, v.terms, xf))


def gram_matrix(left: Sequence[Mapping], right: Sequence[Mapping], xf: XiForm) -> list[list[Cyclo]]:
    """All pairings <left[i], right[j]>, blocked by mode signature.

    Within one signature block the monomial Gram matrix G is computed once and
    the pairings are read off as L G R^t.
    """
    con = contractor(xf)
    blocks: dict = defaultdict(lambda: (set(), set()))
    for u in left:
        for a in u:
            blocks[_signature(a)][0].add(a)
    for v in right:
        for b in v:
            blocks[_signature(b)][1].add(b)
    out = [[0] * len(right) for _ in left]
    for sig, (ls, rs) in blocks.items():
        if not ls or not rs:
            continue
        lmon, rmon = sorted(ls), sorted(rs)
        G = [[con.pair_monomials(a, b) for b in rmon] for a in lmon]
        # (L G) then (L G) R^t
        lg = []
        for u in left:
            row = [0] * len(rmon)
            for ai, a in enumerate(lmon):
                x = u.get(a)
                if x:
                    grow = G[ai]
                    for bj in range(len(rmon)):
                        if grow[bj]:
                            row[bj] = row[bj] + x * grow[bj]
            lg.append(row)
        for j, v in enumerate(right):
            col = [(bj, v.get(b)) for bj, b in enumerate(rmon) if v.get(b)]
            if not col:
                continue
            for i, row in enumerate(lg):
                acc = 0
                for bj, y in col:
                    if row[bj]:
                        acc = acc + row[bj] * y
                if acc:
                    out[i][j] = out[i][j] + acc
    return [[cyclo(x) for x in row] for row in out]


# -- characteristic map ------------------------------------------------------------

def power_sum_terms(k: int, coords: Sequence) -> dict:
    """a_{-k}(gamma) for gamma with the given irreducible coordinates."""
    r = len(coords)
    return {tuple((k,) if i == j else () for i in range(r)): c for j, c in enumerate(coords) if c}


_APRIME: dict = {}


def a_prime_terms(group: GroupData, rho: PartFn) -> dict:
    """a'_{-rho} = prod_c prod_{k in rho(c)} a_{-k}(c) expanded in the gamma basis."""
    key = (id(group), rho)
    hit = _APRIME.get(key)
    if hit is not None and hit[0] is group:
        return hit[1]
    r = group.num_classes
    out = {((),) * r: 1}
    for c, lam in enumerate(rho):
        coords = class_coords(group, c)
        for k in lam:
            out = _mul_terms(out, power_sum_terms(k, coords))
    _APRIME[key] = (group, out)
    return out


def a_prime(group: GroupData, rho: PartFn) -> SymVec:
    return SymVec(group.num_classes, a_prime_terms(group, rho))


def ch(f: WreathClassFn, xf: XiForm | None = None) -> SymVec:
    """ch(f) = sum_rho Z_rho^{-1} f_rho a'_{-rho}, expanded in the gamma basis.

    ``xf`` is accepted for signature symmetry; ch does not depend on xi.
    """
    grp = f.group
    out: dict = {}
    for rho, v in f.values.items():
        s = _as_number(v) * Fraction(1, Z(grp, rho))
        for k, x in a_prime_terms(grp, rho).items():
            _add_into(out, k, x * s)
    return SymVec(grp.num_classes, out)


def to_class_basis(v: SymVec, group: GroupData) -> dict:
    """Coefficients of v in the class-indexed monomials a'_{-rho}."""
    r = group.num_classes
    conv = [gamma_from_classes(group, i) for i in range(r)]
    out: dict = {}
    for rho, x in v.terms.items():
        acc = {((),) * r: x}
        for i, lam in enumerate(rho):
            for k in lam:
                factor = {tuple((k,) if j == c else () for j in range(r)): w for c, w in conv[i].items()}
                acc = _mul_terms(acc, factor)
        for k, y in acc.items():
            _add_into(out, k, y)
    return out


def ch_inverse(v: SymVec, group: GroupData) -> dict[int, WreathClassFn]:
    """Inverse of ch, split by degree n."""
    by_n: dict[int, dict] = defaultdict(dict)
    for rho, x in to_class_basis(v, group).items():
        by_n[_norm(rho)][rho] = cyclo(x) * Z(group, rho)
    return {n: WreathClassFn(group, n, vals) for n, vals in by_n.items()}


# -- Schur functions and exponential series ------------------------------------------

@lru_cache(maxsize=None)
def _schur_single(mu: tuple) -> tuple:
    """s_mu in power sums of one alphabet: ((nu, coefficient), ...)."""
    n = sum(mu)
    out = []
    for nu in partitions(n):
        chi = mn_character(mu, nu)
        if chi:
            out.append((nu, Fraction(chi, z_lambda(nu))))
    return tuple(out)


def schur_terms(lam: PartFn) -> dict:
    r = len(lam)
    out = {((),) * r: 1}
    for i, mu in enumerate(lam):
        if not mu:
            continue
        factor = {}
        for nu, c in _schur_single(tuple(mu)):
            key = tuple(nu if j == i else () for j in range(r))
            factor[key] = c.numerator if c.denominator == 1 else c
        out = _mul_terms(out, factor)
    return out


def schur(lam: PartFn) -> SymVec:
    """s_lam = prod_gamma s_{lam(gamma)}(gamma)."""
    return SymVec(len(lam), schur_terms(lam))


def h_terms(j: int, coords: Sequence) -> dict:
    """z^j coefficient of exp(sum_n a_{-n}(gamma) z^n / n): sum_{mu |- j} z_mu^{-1} a_{-mu}(gamma)."""
    return _exp_coeff(j, tuple(coords), 1)


def e_terms(j: int, coords: Sequence) -> dict:
    """z^j coefficient of exp(-sum_n a_{-n}(gamma) z^n / n)."""
    return _exp_coeff(j, tuple(coords), -1)


_EXP_CACHE: dict = {}


def _exp_coeff(j: int, coords: tuple, sign: int) -> dict:
    key = (j, coords, sign)
    hit = _EXP_CACHE.get(key)
    if hit is not None:
        return hit
    r = len(coords)
    out: dict = {}
    if j >= 0:
        for mu in partitions(j):
            w = Fraction(sign ** len(mu), z_lambda(mu))
            acc = {((),) * r: w.numerator if w.denominator == 1 else w}
            for k in mu:
                acc = _mul_terms(acc, power_sum_terms(k, coords))
            for kk, v in acc.items():
                _add_into(out, kk, v)
    _EXP_CACHE[key] = out
    return out


def exp_series(coords: Sequence, order: int, sign: int = 1, alternate: bool = False) -> list[SymVec]:
    """Coefficients z^0..z^order of exp(sign * sum_n c_n a_{-n}(gamma) z^n / n).

    ``alternate`` inserts (-1)^{n-1} into c_n. Computed by the recursion
    k E_k = sum_{n=1}^k c_n p_n E_{k-n}, independently of the partition sums.
    """
    r = len(coords)
    series = [{((),) * r: 1}]
    for k in range(1, order + 1):
        acc: dict = {}
        for n in range(1, k + 1):
            c = sign * ((-1) ** (n - 1) if alternate else 1)
            term = _mul_terms(power_sum_terms(n, coords), series[k - n])
            for kk, v in term.items():
                _add_into(acc, kk, v * c)
        series.append(_scale_terms(acc, Fraction(1, k)))
    return [SymVec(r, s) for s in series]


def gen_series_check(gamma: ClassFn, N: int, xf: XiForm | None = None) -> Report:
    """Both exponential generating-function identities, coefficientwise to z^N."""
    grp = gamma.group
    coords = coords_of(gamma)
    neg = tuple(-c for c in coords)
    details = []
    ok = True
    eta_side = exp_series(coords, N)
    eps_side = exp_series(coords, N, alternate=True)
    # substituting gamma -> -gamma and z -> -z turns one series into the other
    swapped = exp_series(neg, N)
    for n in range(N + 1):
        if n == 0:
            lhs_eta = lhs_eps = SymVec.vacuum(grp.num_classes)
        else:
            lhs_eta = ch(eta_n(gamma, n))
            lhs_eps = ch(epsilon_n(gamma, n))
        good_eta = lhs_eta == eta_side[n]
        good_eps = lhs_eps == eps_side[n]
        good_sub = swapped[n] * ((-1) ** n) == eps_side[n]
        ok &= good_eta and good_eps and good_sub
        details.append({"n": n, "eta": good_eta, "epsilon": good_eps, "substitution": good_sub})
    return Report("genfun", ok, details)


def character_from_schur(lam: PartFn, group: GroupData) -> WreathClassFn:
    """chi^lam = ch^{-1}(s_lam)."""
    n = _norm(lam)
    parts = ch_inverse(schur(lam), group)
    return parts.get(n, WreathClassFn(group, n))


def irreducible_labels(group: GroupData, n: int) -> tuple[PartFn, ...]:
    """Partition-valued functions on irreducibles labelling the irreducibles of G_n."""
    return types(group, n)
