"""Lattice vertex operators on F_G = S_G (x) C[R_Z(G)].

Basis vectors are pairs (rho, alpha): a power-sum monomial a_{-rho} and a
lattice point alpha in irreducible coordinates. ``VertexEngine`` holds the
lattice data for one integral weighted form and memoizes vertex-operator
components on basis vectors, which is what makes the operator identity checks
affordable.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from wreathvo.fock import (
    SymVec,
    _add_into,
    _split_terms,
    _as_number,
    _mul_terms,
    _norm,
    a_prime_terms,
    contractor,
    form_row,
    h_terms,
    heis_terms,
    inner_terms,
    monomial_to_string,
    parse_monomial,
    schur_terms,
)
from wreathvo.groups import GroupData, GroupError, Report, XiForm
from wreathvo.partitions import PartFn, partitions
from wreathvo.scalar import Cyclo, cyclo
from wreathvo.wreath import bar, types

Lat = tuple  # tuple[int, ...]


class LatticeError(ValueError):
    pass


# -- lattice and cocycle -------------------------------------------------------------

class Cocycle:
    """Bimultiplicative sign cocycle with eps(g_i, g_j) = 1 for i <= j.

    For i > j, eps(g_i, g_j) = (-1)^{a_ij + a_ii a_jj}, which gives
    eps(a, b) eps(b, a) = (-1)^{<a, b> + <a, a><b, b>}.
    """

    def __init__(self, A: Sequence[Sequence[int]]):
        self.A = [list(row) for row in A]
        r = len(A)
        self.e = [[((A[i][j] + A[i][i] * A[j][j]) % 2) if i > j else 0 for j in range(r)] for i in range(r)]

    def __call__(self, a: Lat, b: Lat) -> int:
        s = 0
        e = self.e
        for i, ai in enumerate(a):
            if ai % 2:
                row = e[i]
                for j in range(i):
                    if row[j] and b[j] % 2:
                        s += 1
        return -1 if s % 2 else 1

    def commutator(self, a: Lat, b: Lat) -> int:
        return self(a, b) * self(b, a)


def build_cocycle(A: Sequence[Sequence[int]]) -> Cocycle:
    return Cocycle(A)


class Lattice:
    def __init__(self, xf: XiForm):
        if not xf.integral:
            raise LatticeError("the weighted form must be integral on R_Z(G)")
        self.xf = xf
        self.A = xf.A_int
        self.rank = len(self.A)
        self.eps = Cocycle(self.A)

    def pair(self, a: Lat, b: Lat) -> int:
        A = self.A
        acc = 0
        for i, ai in enumerate(a):
            if ai:
                row = A[i]
                for j, bj in enumerate(b):
                    if bj:
                        acc += ai * row[j] * bj
        return acc

    def norm2(self, a: Lat) -> int:
        return self.pair(a, a)

    def basis(self, i: int) -> Lat:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self) -> Lat:
        return (0,) * self.rank


def add(a: Lat, b: Lat) -> Lat:
    return tuple(x + y for x, y in zip(a, b))


def neg(a: Lat) -> Lat:
    return tuple(-x for x in a)


def scale(a: Lat, k: int) -> Lat:
    return tuple(k * x for x in a)


# -- vectors --------------------------------------------------------------------------

class FockVec:
    """A finite combination of basis vectors a_{-rho} e^alpha."""

    __slots__ = ("num_labels", "terms")

    def __init__(self, num_labels: int, terms: Mapping | None = None):
        self.num_labels = num_labels
        self.terms: dict = {}
        for k, v in (terms or {}).items():
            _add_into(self.terms, k, v)

    @classmethod
    def basis(cls, rho: PartFn, alpha: Lat, coeff=1) -> "FockVec":
        return cls(len(rho), {(rho, tuple(alpha)): coeff})

    @classmethod
    def lattice_vector(cls, alpha: Lat) -> "FockVec":
        return cls.basis(((),) * len(alpha), alpha)

    @classmethod
    def from_sym(cls, v: SymVec, alpha: Lat) -> "FockVec":
        return cls(v.num_labels, {(rho, tuple(alpha)): c for rho, c in v.terms.items()})

    def __add__(self, other: "FockVec") -> "FockVec":
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return FockVec(self.num_labels, out)

    def __sub__(self, other: "FockVec") -> "FockVec":
        return self + other * -1

    def __mul__(self, s) -> "FockVec":
        s = _as_number(s)
        return FockVec(self.num_labels, {k: v * s for k, v in self.terms.items()} if s else {})

    __rmul__ = __mul__

    def __neg__(self) -> "FockVec":
        return self * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVec):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(cyclo(v) == cyclo(other.terms[k]) for k, v in self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sector(self, alpha: Lat) -> SymVec:
        """The S_G component at lattice point alpha."""
        alpha = tuple(alpha)
        return SymVec(self.num_labels, {rho: v for (rho, a), v in self.terms.items() if a == alpha})

    def lattice_support(self) -> set:
        return {a for (_, a) in self.terms}

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (k[1], _norm(k[0]), monomial_to_string(k[0])))
        out = []
        for rho, a in keys:
            out.append(f"({cyclo(self.terms[(rho, a)])}) {monomial_to_string(rho)} e^({','.join(map(str, a))})")
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"FockVec({self.to_string()!r})"


def parse_fockvec(text: str, num_labels: int) -> FockVec:
    """Inverse of ``FockVec.to_string``; a bare term without coefficient means coefficient 1."""
    text = text.strip()
    out = FockVec(num_labels)
    if text == "0":
        return out
    for term in _split_terms(text):
        coeff = "1"
        if term.startswith("("):
            close = term.index(")")
            coeff, term = term[1:close], term[close + 1 :].strip()
        mono, sep, lat = term.partition("e^(")
        if sep:
            if not lat.endswith(")"):
                raise ValueError(f"malformed lattice part in {term!r}")
            alpha = tuple(int(x) for x in lat[:-1].split(",") if x.strip())
        else:
            alpha = (0,) * num_labels
        if len(alpha) != num_labels:
            raise ValueError(f"expected {num_labels} lattice coordinates in {term!r}")
        out = out + FockVec.basis(parse_monomial(mono.strip() or "1", num_labels), alpha, cyclo(coeff))
    return out


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# -- the engine ---------------------------------------------------------------------------

class VertexEngine:
    """Vertex operators X_n(gamma), Heisenberg modes and lattice operators for one form."""

    def __init__(self, xf: XiForm, check_degrees: bool = True):
        self.xf = xf
        self.group = xf.group
        self.lat = Lattice(xf)
        self.r = self.lat.rank
        self.eps = self.lat.eps
        self.check_degrees = check_degrees
        self._x_cache: dict = {}
        self._row_cache: dict = {}
        self._e_cache: dict = {}
        self._e2_cache: dict = {}

    # basic data

    def degree(self, rho: PartFn, alpha: Lat) -> Fraction:
        return _norm(rho) + Fraction(self.lat.norm2(alpha), 2)

    def vec_degrees(self, v: FockVec) -> set:
        return {self.degree(rho, a) for rho, a in v.terms}

    def row(self, gamma: Lat) -> tuple:
        hit = self._row_cache.get(gamma)
        if hit is None:
            hit = self._row_cache[gamma] = form_row(self.xf, gamma)
        return hit

    def vacuum(self) -> FockVec:
        return FockVec.lattice_vector(self.lat.zero())

    # lattice operators

    def apply_exp(self, alpha: Lat, v: FockVec) -> FockVec:
        """e^alpha . (u e^beta) = eps(alpha, beta) u e^{alpha + beta}."""
        out: dict = {}
        for (rho, b), c in v.terms.items():
            _add_into(out, (rho, add(alpha, b)), c * self.eps(alpha, b))
        return FockVec(self.r, out)

    def apply_d(self, gamma: Lat, v: FockVec) -> FockVec:
        """d_gamma (u e^beta) = <gamma, beta> u e^beta."""
        out: dict = {}
        for (rho, b), c in v.terms.items():
            _add_into(out, (rho, b), c * self.lat.pair(gamma, b))
        return FockVec(self.r, out)

    # Heisenberg modes on F_G (mode 0 is d_gamma)

    def apply_heis(self, mode: int, gamma: Sequence, v: FockVec) -> FockVec:
        gamma = tuple(gamma)
        if mode == 0:
            return self.apply_d(gamma, v)
        by_alpha: dict = defaultdict(dict)
        for (rho, a), c in v.terms.items():
            by_alpha[a][rho] = c
        out: dict = {}
        for a, terms in by_alpha.items():
            for rho, c in heis_terms(mode, gamma, terms, self.xf).items():
                out[(rho, a)] = c
        return FockVec(self.r, out)

    # exponential half-operators

    def annihilator_expand(self, rho: PartFn, rows: Sequence[tuple], signs: Sequence[int]) -> dict:
        """Expand prod over translations p_{n,j} -> p_{n,j} + sign_t * row_t[j] * z_t^{-n}.

        This is exp(sign * sum_n a_n(gamma) z^{-n} / n) applied to a_{-rho}: the
        positive modes act as derivations, so the exponential is a translation.
        Returns {(k_1, ..., k_T): terms} where k_t is the power of z_t^{-1}.
        """
        T = len(rows)
        groups = []
        for j, lam in enumerate(rho):
            for n, m in _counts(lam):
                groups.append((j, n, m))
        state = {((0,) * T, rho): 1}
        for j, n, m in groups:
            coeffs = [sign * row[j] for row, sign in zip(rows, signs)]
            new: dict = {}
            for (ks, mon), c in state.items():
                for split in _splits(m, T):
                    removed = sum(split)
                    w = math.factorial(m)
                    for t in split:
                        w //= math.factorial(t)
                    w //= math.factorial(m - removed)
                    val = c * w
                    skip = False
                    for t, cnt in enumerate(split):
                        if cnt:
                            if not coeffs[t]:
                                skip = True
                                break
                            val = val * coeffs[t] ** cnt
                    if skip:
                        continue
                    if removed:
                        parts = list(mon[j])
                        for _ in range(removed):
                            parts.remove(n)
                        mon2 = mon[:j] + (tuple(parts),) + mon[j + 1 :]
                    else:
                        mon2 = mon
                    ks2 = tuple(k + n * t for k, t in zip(ks, split))
                    _add_into(new, (ks2, mon2), val)
            state = new
        out: dict = defaultdict(dict)
        for (ks, mon), c in state.items():
            _add_into(out[ks], mon, c)
        return {k: v for k, v in out.items() if v}

    def e_minus(self, rho: PartFn, gamma: Lat) -> dict:
        """{k: z^{-k} coefficient of E_-(gamma, z) a_{-rho}}."""
        key = (rho, gamma)
        hit = self._e_cache.get(key)
        if hit is None:
            raw = self.annihilator_expand(rho, [self.row(gamma)], [-1])
            hit = self._e_cache[key] = {ks[0]: t for ks, t in raw.items()}
        return hit

    def e_minus_pair(self, rho: PartFn, alpha: Lat, beta: Lat) -> dict:
        key = (rho, alpha, beta)
        hit = self._e2_cache.get(key)
        if hit is None:
            hit = self._e2_cache[key] = self.annihilator_expand(rho, [self.row(alpha), self.row(beta)], [-1, -1])
        return hit

    def half_vertex(self, gamma: Lat, side: str, order: int, v: FockVec) -> list[FockVec]:
        """Coefficients of H_+, E_+ (z^0..z^order) or H_-, E_- (z^0..z^-order) applied to v."""
        gamma = tuple(gamma)
        out = [dict() for _ in range(order + 1)]
        for (rho, a), c in v.terms.items():
            if side in ("H+", "E+"):
                for j in range(order + 1):
                    factor = h_terms(j, gamma) if side == "H+" else _e_plus(j, gamma)
                    for mon, x in _mul_terms(factor, {rho: c}).items():
                        _add_into(out[j], (mon, a), x)
            elif side in ("H-", "E-"):
                sign = 1 if side == "H-" else -1
                raw = self.annihilator_expand(rho, [self.row(gamma)], [sign])
                for ks, terms in raw.items():
                    if ks[0] <= order:
                        for mon, x in terms.items():
                            _add_into(out[ks[0]], (mon, a), x * c)
            else:
                raise ValueError(f"unknown half vertex operator {side!r}")
        return [FockVec(self.r, t) for t in out]

    # vertex operators

    def _x_basis(self, gamma: Lat, n: Fraction, rho: PartFn, alpha: Lat) -> dict:
        key = (gamma, n, rho, alpha)
        hit = self._x_cache.get(key)
        if hit is not None:
            return hit
        lat = self.lat
        s = -n - Fraction(lat.norm2(gamma), 2) - lat.pair(gamma, alpha)
        if s.denominator != 1:
            raise LatticeError(f"mode {n} is not in Z + <gamma, gamma>/2")
        s = int(s)
        sign = self.eps(gamma, alpha)
        target = add(alpha, gamma)
        out: dict = {}
        for k, eterms in self.e_minus(rho, gamma).items():
            j = k + s
            if j < 0:
                continue
            for mon, c in _mul_terms(h_terms(j, gamma), eterms).items():
                _add_into(out, (mon, target), c * sign)
        if self.check_degrees and out:
            want = self.degree(rho, alpha) - n
            for mon, a in out:
                if self.degree(mon, a) != want:
                    raise AssertionError("vertex operator mode broke the degree shift")
        self._x_cache[key] = out
        return out

    def apply_X(self, gamma: Sequence, n, v: FockVec) -> FockVec:
        """X_n(gamma) v, with X(gamma, z) = sum_n X_n(gamma) z^{-n - <gamma, gamma>/2}."""
        gamma = tuple(gamma)
        n = as_fraction(n)
        out: dict = {}
        for (rho, a), c in v.terms.items():
            for k, x in self._x_basis(gamma, n, rho, a).items():
                _add_into(out, k, x * c)
        return FockVec(self.r, out)

    def valid_mode(self, gamma: Lat, n) -> bool:
        return (as_fraction(n) - Fraction(self.lat.norm2(gamma), 2)).denominator == 1

    def normal_ordered(self, alpha: Lat, beta: Lat, A: int, B: int, v: FockVec) -> FockVec:
        """[z^A w^B] :X(alpha, z) X(beta, w): v."""
        lat = self.lat
        ab = add(alpha, beta)
        out: dict = {}
        for (rho, lam), c in v.terms.items():
            sign = self.eps(ab, lam)
            target = add(lam, ab)
            ha = A - lat.pair(alpha, lam)
            hb = B - lat.pair(beta, lam)
            for (p, q), eterms in self.e_minus_pair(rho, alpha, beta).items():
                if ha + p < 0 or hb + q < 0:
                    continue
                h = _mul_terms(h_terms(ha + p, alpha), h_terms(hb + q, beta))
                for mon, x in _mul_terms(h, eterms).items():
                    _add_into(out, (mon, target), x * c * sign)
        return FockVec(self.r, out)

    # bilinear form

    def inner(self, u: FockVec, v: FockVec) -> Cyclo:
        """<a e^alpha, b e^beta> = <a, b> delta_{alpha, beta}."""
        by_u: dict = defaultdict(dict)
        for (rho, a), c in u.terms.items():
            by_u[a][rho] = c
        by_v: dict = defaultdict(dict)
        for (rho, a), c in v.terms.items():
            by_v[a][rho] = c
        acc = 0
        for a, terms in by_u.items():
            if a in by_v:
                acc = acc + inner_terms(terms, by_v[a], self.xf)
        return cyclo(acc)

    # test bases

    def test_basis(self, D, box: int = 1, labels: Sequence[int] | None = None) -> list[FockVec]:
        """Basis vectors a_{-rho} e^alpha of degree <= D with |alpha_i| <= box.

        ``labels`` restricts both the Heisenberg generators and the lattice
        directions (used for the delta-reduced space).
        """
        D = as_fraction(D)
        labels = list(range(self.r)) if labels is None else list(labels)
        out = []
        ranges = [range(-box, box + 1) if i in labels else range(0, 1) for i in range(self.r)]
        for alpha in itertools.product(*ranges):
            ld = Fraction(self.lat.norm2(alpha), 2)
            if ld > D or ld < 0:
                continue
            for d in range(int(D - ld) + 1):
                for rho in _partfns_on(self.r, labels, d):
                    out.append(FockVec.basis(rho, alpha))
        return out


def _e_plus(j: int, gamma) -> dict:
    from wreathvo.fock import e_terms

    return e_terms(j, gamma)


def _counts(lam: tuple):
    out = []
    for n in sorted(set(lam), reverse=True):
        out.append((n, lam.count(n)))
    return out


def _splits(m: int, T: int):
    """All (t_1..t_T) with sum <= m."""
    if T == 0:
        yield ()
        return
    for t in range(m + 1):
        for rest in _splits(m - t, T - 1):
            yield (t,) + rest


def _partfns_on(r: int, labels: Sequence[int], d: int):
    from wreathvo.partitions import enumerate_partfn

    for sub in enumerate_partfn(len(labels), d):
        rho = [()] * r
        for lab, lam in zip(labels, sub):
            rho[lab] = lam
        yield tuple(rho)


# -- identity checks -----------------------------------------------------------------------

def _binom(N: int, j: int) -> Fraction:
    """Generalized binomial coefficient C(N, j) for any integer N."""
    out = Fraction(1)
    for t in range(j):
        out = out * (N - t) / (t + 1)
    return out


def ope_check(eng: VertexEngine, alpha: Lat, beta: Lat, D: int, box: int = 1, vectors=None) -> Report:
    """Compare [z^a w^b] of X(alpha,z)X(beta,w)v and eps(alpha,beta):XX:(z-w)^<alpha,beta> v.

    For a basis vector v of degree d the window is every (a, b) whose modes
    m = -a - <alpha,alpha>/2, k = -b - <beta,beta>/2 keep the intermediate and
    final degrees inside [0, d + D]; outside it both sides vanish or lie beyond
    the truncation.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    lat = eng.lat
    N = lat.pair(alpha, beta)
    e_ab = eng.eps(alpha, beta)
    ha, hb = Fraction(lat.norm2(alpha), 2), Fraction(lat.norm2(beta), 2)
    vectors = eng.test_basis(D, box) if vectors is None else vectors
    failures = []
    count = 0
    for v in vectors:
        (rho, lam), = v.terms
        d = eng.degree(rho, lam)
        # k ranges over modes with d - k in [0, d + D]
        k_lo = -D - (hb.denominator == 2) * Fraction(1, 2)
        kvals = [k for k in _half_range(hb, -D, d)]
        for k in kvals:
            mid = eng.apply_X(beta, k, v)
            for m in _half_range(ha, -D - k, d - k):
                lhs = eng.apply_X(alpha, m, mid)
                a = -m - ha
                b = -k - hb
                a, b = int(a), int(b)
                rhs = FockVec(eng.r)
                # w exponent of the normal-ordered product is at least <beta, lam> - deg(rho)
                jmax = b - (lat.pair(beta, lam) - _norm(rho))
                if N >= 0:
                    jmax = min(jmax, N)
                for j in range(0, max(jmax, -1) + 1):
                    cb = _binom(N, j)
                    if not cb:
                        continue
                    term = eng.normal_ordered(alpha, beta, a - N + j, b - j, v)
                    if term:
                        rhs = rhs + term * (cb * (-1) ** j)
                rhs = rhs * e_ab
                count += 1
                if lhs != rhs:
                    failures.append({"vector": v.to_string(), "z": a, "w": b})
    return Report(
        "ope",
        not failures,
        [{"alpha": list(alpha), "beta": list(beta), "coefficients": count, "failures": failures[:10]}],
    )


def _half_range(offset: Fraction, lo, hi):
    """Values n in Z + offset with lo <= n <= hi."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    frac = offset - math.floor(offset)
    start = math.ceil(lo - frac) + frac
    n = start
    while n <= hi:
        yield n
        n += 1


def clifford_check(eng: VertexEngine, M, D: int, box: int = 1) -> Report:
    """Anticommutators of X^+_m(g_i) = X_m(g_i), X^-_m(g_i) = X_m(-g_i) for xi trivial."""
    if not eng.xf.is_trivial():
        raise LatticeError("the Clifford relations need xi = gamma_0")
    M = as_fraction(M)
    modes = list(_half_range(Fraction(1, 2), -M, M))
    vectors = eng.test_basis(D, box)
    r = eng.r
    gens = {("+", i): eng.lat.basis(i) for i in range(r)}
    gens.update({("-", i): neg(eng.lat.basis(i)) for i in range(r)})
    failures = []
    counts = {"++": 0, "--": 0, "+-": 0}
    for (s1, i), (s2, j) in itertools.product(gens, repeat=2):
        fam = s1 + s2
        if fam == "-+":
            continue
        g1, g2 = gens[(s1, i)], gens[(s2, j)]
        for m, n in itertools.product(modes, repeat=2):
            expect_id = fam == "+-" and i == j and m == -n
            for v in vectors:
                lhs = eng.apply_X(g1, m, eng.apply_X(g2, n, v)) + eng.apply_X(g2, n, eng.apply_X(g1, m, v))
                rhs = v if expect_id else FockVec(r)
                counts[fam] += 1
                if lhs != rhs:
                    failures.append({"family": fam, "i": i, "j": j, "m": str(m), "n": str(n), "vector": v.to_string()})
    return Report("clifford", not failures, [{"checks": counts, "failures": failures[:10]}])


def prim_check(eng: VertexEngine, alpha: Lat, beta: Lat, modes: Iterable[int], D: int, box: int = 1) -> Report:
    """[a_n(alpha), X_m(beta)] = <alpha, beta> X_{m+n}(beta) on a test basis."""
    alpha, beta = tuple(alpha), tuple(beta)
    c = eng.lat.pair(alpha, beta)
    hb = Fraction(eng.lat.norm2(beta), 2)
    failures = []
    count = 0
    for v in eng.test_basis(D, box):
        d = max(eng.vec_degrees(v))
        for n in modes:
            for m in _half_range(hb, -D, d + abs(n)):
                lhs = eng.apply_heis(n, alpha, eng.apply_X(beta, m, v)) - eng.apply_X(beta, m, eng.apply_heis(n, alpha, v))
                rhs = eng.apply_X(beta, m + n, v) * c
                count += 1
                if lhs != rhs:
                    failures.append({"n": n, "m": str(m), "vector": v.to_string()})
    return Report("prim", not failures, [{"checks": count, "failures": failures[:10]}])


def adjoint_check(eng: VertexEngine, gamma: Lat, D: int, box: int = 1) -> Report:
    """<X_n(g) u, v> = eps(g, g) <u, X_{-n}(-g) v> on pairs of test vectors."""
    gamma = tuple(gamma)
    sign = eng.eps(gamma, gamma)
    vecs = eng.test_basis(D, box)
    hg = Fraction(eng.lat.norm2(gamma), 2)
    failures = []
    count = 0
    for u in vecs:
        du = max(eng.vec_degrees(u))
        for n in _half_range(hg, du - D, du):
            xu = eng.apply_X(gamma, n, u)
            for v in vecs:
                lhs = eng.inner(xu, v)
                rhs = eng.inner(u, eng.apply_X(neg(gamma), -n, v)) * sign
                count += 1
                if lhs != rhs:
                    failures.append({"n": str(n), "u": u.to_string(), "v": v.to_string()})
    return Report("adjoint", not failures, [{"checks": count, "sign": sign, "failures": failures[:10]}])


# -- Schur states and character values ------------------------------------------------------

def omega(lam: PartFn) -> Lat:
    """omega(lam) = sum_gamma l(lam(gamma)) gamma."""
    return tuple(len(p) for p in lam)


def schur_state(eng: VertexEngine, lam: PartFn, alpha: Lat) -> FockVec:
    """prod_gamma X_{-lam(gamma) - delta - (<gamma, alpha> + 1/2)}(gamma) . e^alpha, gamma_0 leftmost."""
    if not eng.xf.is_trivial():
        raise LatticeError("Schur states are defined for xi = gamma_0")
    alpha = tuple(alpha)
    v = FockVec.lattice_vector(alpha)
    for i in reversed(range(eng.r)):
        parts = lam[i]
        l = len(parts)
        g = eng.lat.basis(i)
        shift = eng.lat.pair(g, alpha) + Fraction(1, 2)
        modes = [-parts[t] - (l - 1 - t) - shift for t in range(l)]
        for mode in reversed(modes):  # rightmost factor acts first
            v = eng.apply_X(g, mode, v)
    return v


def schur_state_image(lam: PartFn, alpha: Lat, eng: VertexEngine) -> FockVec:
    """The expected image eps(omega, alpha) s_lam e^{alpha + omega} of a Schur state."""
    w = omega(lam)
    return FockVec(eng.r, {(rho, add(alpha, w)): c * eng.eps(w, alpha) for rho, c in schur_terms(lam).items()})


def character_value(group: GroupData, lam: PartFn, mu: PartFn) -> Cyclo:
    """chi^lam at the class of type mu, as <s_lam, a'_{-mu-bar}> under xi = gamma_0."""
    from wreathvo.groups import trivial_xi

    if _norm(lam) != _norm(mu):
        raise ValueError(f"size mismatch between {lam} and {mu}")
    xf = _trivial_form(group)
    return cyclo(inner_terms(schur_terms(lam), a_prime_terms(group, bar(group, mu)), xf))


_TRIVIAL_FORMS: dict = {}


def _trivial_form(group: GroupData) -> XiForm:
    from wreathvo.groups import trivial_xi

    hit = _TRIVIAL_FORMS.get(id(group))
    if hit is None or hit.group is not group:
        hit = _TRIVIAL_FORMS[id(group)] = trivial_xi(group)
    return hit


def character_value_vertex(eng: VertexEngine, lam: PartFn, mu: PartFn) -> Cyclo:
    """The same value read off the vertex-operator state s_{lam, -omega(lam)}.

    The state lives in lattice sector 0 and equals eps(omega, -omega) s_lam there.
    """
    grp = eng.group
    if _norm(lam) != _norm(mu):
        raise ValueError(f"size mismatch between {lam} and {mu}")
    w = omega(lam)
    state = schur_state(eng, lam, neg(w))
    sym = state.sector(eng.lat.zero())
    sign = eng.eps(w, neg(w))
    return cyclo(inner_terms(sym.terms, a_prime_terms(grp, bar(grp, mu)), eng.xf)) * sign


def character_table(group: GroupData, n: int, route: str = "fock", eng: VertexEngine | None = None):
    """(rows, cols, values) with rows = irreducible labels, cols = class types, canonical order."""
    rows = types(group, n)  # same enumeration over irreducible labels
    cols = types(group, n)
    if route == "vertex":
        eng = eng or VertexEngine(_trivial_form(group))
        values = [[character_value_vertex(eng, lam, mu) for mu in cols] for lam in rows]
    elif route == "fock":
        values = [[character_value(group, lam, mu) for mu in cols] for lam in rows]
    else:
        raise ValueError(f"unknown route {route!r}")
    return rows, cols, values
