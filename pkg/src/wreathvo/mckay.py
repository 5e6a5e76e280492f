"""Affine Cartan data from finite subgroups of SU(2) and the toroidal relations.

``build_affine`` reads off the ADE type from the weighted Gram matrix of the
McKay form. The relation checks instantiate each bracket as an operator
identity on a spanning set of test vectors, so a failure names the exact
(relation, vector) pair.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from wreathvo.groups import GroupData, GroupError, Report, XiForm, build_group, mckay_eigencheck, mckay_xi, radical_check
from wreathvo.lattice import FockVec, VertexEngine, add, neg, _half_range
from wreathvo.linalg import rref
from wreathvo.partitions import partition_count_series
from wreathvo.scalar import Cyclo, cyclo


class McKayError(ValueError):
    pass


# -- diagrams ---------------------------------------------------------------------------

def diagram_edges(A: Sequence[Sequence[int]]) -> list[tuple[int, int, int]]:
    """(i, j, multiplicity) for i < j with a_ij < 0."""
    r = len(A)
    return [(i, j, -A[i][j]) for i in range(r) for j in range(i + 1, r) if A[i][j] < 0]


def classify_diagram(A: Sequence[Sequence[int]]) -> str:
    """Name the affine ADE diagram of a symmetric generalized Cartan matrix, e.g. "affine D4"."""
    r = len(A)
    if any(A[i][i] != 2 for i in range(r)):
        raise McKayError("diagonal entries must all be 2")
    if any(A[i][j] != A[j][i] or (i != j and A[i][j] > 0) for i in range(r) for j in range(r)):
        raise McKayError("off-diagonal entries must be symmetric and non-positive")
    edges = diagram_edges(A)
    if r == 2 and edges == [(0, 1, 2)]:
        return "affine A1"
    if any(m != 1 for _, _, m in edges):
        raise McKayError(f"no affine ADE diagram has edge multiplicities {sorted(m for *_, m in edges)}")
    adj = {i: set() for i in range(r)}
    for i, j, _ in edges:
        adj[i].add(j)
        adj[j].add(i)
    if not _connected(adj):
        raise McKayError("diagram is disconnected")
    deg = {i: len(adj[i]) for i in adj}
    if len(edges) == r and all(d == 2 for d in deg.values()) and r >= 3:
        return f"affine A{r - 1}"
    if len(edges) != r - 1:
        raise McKayError("diagram has a cycle but is not a single cycle")
    branch = [i for i in adj if deg[i] >= 3]
    if r == 5 and len(branch) == 1 and deg[branch[0]] == 4:
        return "affine D4"
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        if all(sum(deg[k] == 1 for k in adj[b]) == 2 for b in branch):
            return f"affine D{r - 1}"
    if len(branch) == 1 and deg[branch[0]] == 3:
        arms = sorted(_arm_length(adj, branch[0], k) for k in adj[branch[0]])
        named = {(2, 2, 2): "affine E6", (1, 3, 3): "affine E7", (1, 2, 5): "affine E8"}
        if tuple(arms) in named:
            return named[tuple(arms)]
    raise McKayError("diagram is not an affine ADE diagram")


def _connected(adj: dict) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for k in adj[stack.pop()]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return len(seen) == len(adj)


def _arm_length(adj: dict, center: int, start: int) -> int:
    prev, cur, n = center, start, 1
    while True:
        nxt = [k for k in adj[cur] if k != prev]
        if not nxt:
            return n
        prev, cur, n = cur, nxt[0], n + 1


def expected_label(spec: str) -> str:
    name, _, arg = spec.partition(":")
    if name == "cyclic":
        return f"affine A{int(arg) - 1}"
    if name == "bd":
        return f"affine D{int(arg) // 4 + 2}"
    labels = {"bt": "affine E6", "bo": "affine E7", "bi": "affine E8"}
    if name in labels:
        return labels[name]
    raise McKayError(f"{spec!r} is not one of the SU(2) families")


def root_count(label: str) -> int:
    kind, n = label.split()[-1][0], int(label.split()[-1][1:])
    if kind == "A":
        return n * (n + 1)
    if kind == "D":
        return 2 * n * (n - 1)
    return {6: 72, 7: 126, 8: 240}[n]


# -- affine data ------------------------------------------------------------------------------

@dataclass
class AffineData:
    group: GroupData
    xi: XiForm
    cartan: list[list[int]]
    delta: tuple[int, ...]
    diagram: list[tuple[int, int, int]]
    label: str
    reports: list[Report] = field(default_factory=list)

    @property
    def finite_block(self) -> list[list[int]]:
        return [row[1:] for row in self.cartan[1:]]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "label": self.label,
            "cartan": self.cartan,
            "delta": list(self.delta),
            "diagram": [list(e) for e in self.diagram],
            "reports": [r.to_json() for r in self.reports],
        }


def build_affine(spec: str | GroupData, expect: str | None = None) -> AffineData:
    """Assemble the McKay data; raises McKayError if the diagram is not affine ADE."""
    grp = build_group(spec) if isinstance(spec, str) else spec
    xf = mckay_xi(grp)
    if not xf.integral:
        raise McKayError("McKay form is not integral")
    A = xf.A_int
    label = classify_diagram(A)
    reports = [mckay_eigencheck(xf), radical_check(xf)]
    if expect is None and isinstance(spec, str):
        try:
            expect = expected_label(spec)
        except McKayError:
            expect = None
    if expect is not None:
        reports.append(Report("diagram", label == expect, [{"found": label, "expected": expect}]))
    return AffineData(grp, xf, A, tuple(grp.degrees), diagram_edges(A), label, reports)


def enumerate_short_vectors(Q: Sequence[Sequence[int]], bound: int) -> list[tuple[int, ...]]:
    """All nonzero x with x^T Q x <= bound for a positive-definite integer Q.

    Fincke-Pohst over exact rationals: Q = sum_i q_i (x_i + sum_{j>i} mu_ij x_j)^2.
    """
    n = len(Q)
    if n == 0:
        return []
    mu = [[Fraction(Q[i][j]) for j in range(n)] for i in range(n)]
    q = [Fraction(0)] * n
    # LDL^T with unit upper factor
    for i in range(n):
        q[i] = mu[i][i]
        if q[i] <= 0:
            raise McKayError("finite Cartan block is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = mu[i][j] / q[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                mu[j][k] -= mu[i][j] * mu[i][k] * q[i]
    out = []
    x = [0] * n

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if any(x):
                out.append(tuple(x))
            return
        c = sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        span = remaining / q[i]
        lo = math.ceil(-c - _sqrt_up(span))
        hi = math.floor(-c + _sqrt_up(span))
        for v in range(lo, hi + 1):
            t = (v + c) ** 2 * q[i]
            if t <= remaining:
                x[i] = v
                rec(i - 1, remaining - t)
        x[i] = 0

    rec(n - 1, Fraction(bound))
    return sorted(out)


def _sqrt_up(f: Fraction) -> Fraction:
    """A rational upper bound for sqrt(f), tight enough to keep the search box small."""
    if f <= 0:
        return Fraction(0)
    s = math.isqrt(f.numerator * f.denominator) + 1
    return Fraction(s, f.denominator)


def root_enumeration(ad: AffineData) -> list[tuple[int, ...]]:
    """Vectors of norm 2 in the finite sublattice, as full coordinates with a zero gamma_0 entry."""
    Q = ad.finite_block
    return [(0,) + v for v in enumerate_short_vectors(Q, 2) if _qform(Q, v) == 2]


def _qform(Q, v) -> int:
    return sum(v[i] * Q[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


# -- relation checks ----------------------------------------------------------------------

def _zero(eng: VertexEngine) -> FockVec:
    return FockVec(eng.r)


def _comm(f, g, v):
    return f(g(v)) - g(f(v))


def toroidal_relation_check(ad: AffineData | XiForm, M: int = 2, D: int = 2, box: int = 1, serre_modes=None) -> Report:
    """Bracket relations of the toroidal presentation realized by a_n(gamma_i), X_n(+-gamma_i)."""
    xf = ad.xi if isinstance(ad, AffineData) else ad
    eng = VertexEngine(xf)
    r = eng.r
    A = eng.lat.A
    vecs = eng.test_basis(D, box)
    modes = range(-M, M + 1)
    g = [eng.lat.basis(i) for i in range(r)]
    counts: dict = {}
    failures = []

    def record(rel, ok, info):
        counts[rel] = counts.get(rel, 0) + 1
        if not ok:
            failures.append(dict(info, relation=rel))

    def h(i, n):
        return lambda v: eng.apply_heis(n, g[i], v)

    def x(gamma, n):
        return lambda v: eng.apply_X(gamma, n, v)

    for v in vecs:
        vs = v.to_string()
        for i, j in itertools.product(range(r), repeat=2):
            for n, m in itertools.product(modes, repeat=2):
                lhs = _comm(h(i, n), h(j, m), v)
                rhs = v * (n * A[i][j]) if n == -m else _zero(eng)
                record("hh", lhs == rhs, {"i": i, "j": j, "n": n, "m": m, "vector": vs})
                for s in (1, -1):
                    gj = g[j] if s == 1 else neg(g[j])
                    lhs = _comm(h(i, n), x(gj, m), v)
                    rhs = eng.apply_X(gj, n + m, v) * (s * A[i][j])
                    record("hx", lhs == rhs, {"i": i, "j": j, "sign": s, "n": n, "m": m, "vector": vs})
                lhs = _comm(x(g[i], n), x(neg(g[j]), m), v)
                if i == j:
                    rhs = eng.apply_heis(n + m, g[i], v)
                    if n == -m:
                        rhs = rhs + v * n
                    rhs = rhs * eng.eps(g[i], neg(g[i]))
                else:
                    rhs = _zero(eng)
                record("x+x-", lhs == rhs, {"i": i, "j": j, "n": n, "m": m, "vector": vs})
                if i == j:
                    for s in (1, -1):
                        gi = g[i] if s == 1 else neg(g[i])
                        lhs = _comm(x(gi, n), x(gi, m), v)
                        record("xx", not lhs, {"i": i, "sign": s, "n": n, "m": m, "vector": vs})
        serre = modes if serre_modes is None else serre_modes
        for i, j in itertools.permutations(range(r), 2):
            k = 1 - A[i][j]
            for s in (1, -1):
                gi = g[i] if s == 1 else neg(g[i])
                gj = g[j] if s == 1 else neg(g[j])
                for m in serre:
                    total = _zero(eng)
                    for t in range(k + 1):
                        w = v
                        for _ in range(t):
                            w = eng.apply_X(gi, 0, w)
                        w = eng.apply_X(gj, m, w)
                        for _ in range(k - t):
                            w = eng.apply_X(gi, 0, w)
                        if w:
                            total = total + w * (math.comb(k, t) * (-1) ** t)
                    record(f"serre{k}", not total, {"i": i, "j": j, "sign": s, "m": m, "vector": vs})
    return Report(
        "toroidal",
        not failures,
        [{"group": eng.group.name, "M": M, "D": D, "box": box, "checks": counts, "failures": failures[:10]}],
    )


def basic_rep_check(ad: AffineData, D: int = 2) -> Report:
    """Affine relations on the delta-free space and its graded dimensions up to degree D.

    The relations are those among X_n(alpha) for finite roots alpha and the
    modes a_n(gamma_i), i >= 1. The graded dimension of the span generated from
    the vacuum by these operators is compared with the partition-times-theta
    series of the finite lattice.
    """
    eng = VertexEngine(ad.xi)
    r = eng.r
    labels = list(range(1, r))
    roots = root_enumeration(ad)
    lat = eng.lat
    failures = []
    count = 0
    box = max((max(abs(c) for c in a) for a in roots), default=1)
    vecs = [v for v in eng.test_basis(D, box, labels=labels)]
    # pair relations on a few modes; the full list of roots is used for small ranks
    sample = roots if len(roots) <= 12 else roots[:12]
    for v in vecs:
        dv = max(eng.vec_degrees(v))
        for a, b in itertools.product(sample, repeat=2):
            ab = lat.pair(a, b)
            for n, m in itertools.product(range(-1, 2), repeat=2):
                lhs = eng.apply_X(a, n, eng.apply_X(b, m, v)) - eng.apply_X(b, m, eng.apply_X(a, n, v))
                if ab >= 0:
                    rhs = _zero(eng)
                elif ab == -1:
                    rhs = eng.apply_X(add(a, b), n + m, v) * eng.eps(a, b)
                else:  # b = -a
                    rhs = eng.apply_heis(n + m, a, v)
                    if n == -m:
                        rhs = rhs + v * n
                    rhs = rhs * eng.eps(a, b)
                count += 1
                if lhs != rhs:
                    failures.append({"alpha": list(a), "beta": list(b), "n": n, "m": m, "vector": v.to_string()})
    expected = graded_dimensions_expected(ad, D)
    found = graded_dimensions_generated(eng, roots, labels, D)
    dims_ok = expected == found
    return Report(
        "basic_rep",
        not failures and dims_ok,
        [{
            "relations": count,
            "failures": failures[:10],
            "graded_dims_expected": expected,
            "graded_dims_generated": found,
            "irreducibility": "untested",
        }],
    )


def graded_dimensions_expected(ad: AffineData, D: int) -> list[int]:
    """Coefficients of (prod (1-q^n))^{-rank} * sum_alpha q^{<alpha,alpha>/2} up to q^D."""
    Q = ad.finite_block
    rank = len(Q)
    theta = [0] * (D + 1)
    theta[0] = 1
    for v in enumerate_short_vectors(Q, 2 * D):
        theta[_qform(Q, v) // 2] += 1
    parts = partition_count_series(rank, D)
    return [sum(theta[k] * parts[d - k] for k in range(d + 1)) for d in range(D + 1)]


def graded_dimensions_generated(eng: VertexEngine, roots, labels, D: int) -> list[int]:
    """Dimensions per degree of the span of creation-side operators applied to the vacuum."""
    ops = []
    for i in labels:
        for n in range(1, D + 1):
            ops.append(("h", eng.lat.basis(i), -n))
    for a in roots:
        for n in range(-D, 1):
            ops.append(("x", a, n))
    spans: dict = {}  # degree -> (rref rows, keys)
    frontier = [eng.vacuum()]
    basis_by_deg: dict = {}
    _insert(basis_by_deg, 0, eng.vacuum())
    while frontier:
        new = []
        for v in frontier:
            d = max(eng.vec_degrees(v))
            for kind, gamma, n in ops:
                if d - n > D:
                    continue
                w = eng.apply_heis(n, gamma, v) if kind == "h" else eng.apply_X(gamma, n, v)
                if not w:
                    continue
                dw = max(eng.vec_degrees(w))
                if _insert(basis_by_deg, dw, w):
                    new.append(w)
        frontier = new
    return [len(basis_by_deg.get(Fraction(d), ())) for d in range(D + 1)]


def _insert(store: dict, degree, w: FockVec) -> bool:
    """Add w to the spanning list of its degree if it raises the rank."""
    degree = Fraction(degree)
    vecs = store.setdefault(degree, [])
    keys = sorted({k for u in vecs + [w] for k in u.terms}, key=repr)
    rows = [[cyclo(u.terms.get(k, 0)) for k in keys] for u in vecs + [w]]
    _, pivots = rref(rows)
    if len(pivots) > len(vecs):
        vecs.append(w)
        return True
    return False


def mckay_summary(spec: str, with_relations: bool = False, D: int = 2) -> dict:
    """Data for the ``mckay`` command: label, Cartan matrix, delta, edges, roots and reports."""
    ad = build_affine(spec)
    roots = root_enumeration(ad)
    root_report = Report("roots", len(roots) == root_count(ad.label), [{"found": len(roots), "expected": root_count(ad.label)}])
    ad.reports.append(root_report)
    if with_relations:
        ad.reports.append(basic_rep_check(ad, D))
    out = ad.to_json()
    out["group"] = spec
    out["root_count"] = len(roots)
    out["passed"] = ad.passed()
    return out
