"""Finite base groups with exact character tables, class functions and weighted forms.

Groups are built at element level (Cayley table) so that conjugacy classes,
inverse classes and centralizer orders are computed by brute force. Character
tables come from closed formulas (cyclic, binary dihedral), stored tables
(binary tetrahedral/octahedral/icosahedral) or a numerical Burnside computation
rounded to exact values (Cayley-table input). Every table is checked exactly
against both orthogonality relations before it is returned.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from wreathvo import _tables
from wreathvo.linalg import matvec, nullspace
from wreathvo.scalar import ONE, ZERO, Cyclo, cyclo

Matrix = tuple  # (a, b, c, d) for [[a, b], [c, d]]


class GroupError(ValueError):
    pass


# -- element engine -----------------------------------------------------------

def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _close(gens: Sequence[Matrix], limit: int = 10000):
    """BFS closure of matrix generators.

    Returns (elements, right-multiplication permutations per generator). Each
    element after the identity is recorded as parent * generator, which lets the
    Cayley table be filled with permutation lookups instead of matrix products.
    """
    ident = (ONE, ZERO, ZERO, ONE)
    elems = [ident]
    index = {ident: 0}
    parent = [(-1, -1)]
    i = 0
    while i < len(elems):
        for s, g in enumerate(gens):
            m = _mat_mul(elems[i], g)
            if m not in index:
                index[m] = len(elems)
                elems.append(m)
                parent.append((i, s))
                if len(elems) > limit:
                    raise GroupError("generators do not close to a small finite group")
        i += 1
    right = [[index[_mat_mul(e, g)] for e in elems] for g in gens]
    return elems, index, parent, right


def _cayley_from_closure(parent, right) -> list[list[int]]:
    n = len(parent)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        row = table[i]
        row[0] = i
        for j in range(1, n):
            p, s = parent[j]
            row[j] = right[s][row[p]]
    return table


@dataclass(eq=False)
class GroupData:
    """A finite group with conjugacy-class data and an exact character table.

    ``char_table[i][c]`` is the value of irreducible i on class c. Class 0 is the
    identity class and irreducible 0 is the trivial character.
    """

    name: str
    mult: list[list[int]]
    classes: list[list[int]] = field(default_factory=list)
    char_table: list[list[Cyclo]] = field(default_factory=list)
    conductor: int = 1
    matrices: list[Matrix] | None = None
    natural: int | None = None  # index of the defining 2-dim irreducible
    irrep_order_note: str = ""

    def __post_init__(self):
        n = self.order = len(self.mult)
        self.identity = next(i for i in range(n) if self.mult[i] == list(range(n)))
        if self.identity != 0:
            raise GroupError("element 0 must be the identity")
        self.inverse = [row.index(0) for row in self.mult]
        self.elem_order = [self._order_of(g) for g in range(n)]
        if not self.classes:
            self.classes = _conjugacy_classes(self)
        self.class_of = [0] * n
        for c, cl in enumerate(self.classes):
            for g in cl:
                self.class_of[g] = c
        self.class_size = [len(cl) for cl in self.classes]
        self.zeta = [n // s for s in self.class_size]
        self.inv_class = [self.class_of[self.inverse[cl[0]]] for cl in self.classes]
        self.exponent = math.lcm(*self.elem_order)

    def _order_of(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mult[x][g]
            k += 1
        return k

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def degrees(self) -> list[int]:
        return [row[0].to_int() for row in self.char_table]

    def irrep(self, i: int) -> "ClassFn":
        return ClassFn(self, tuple(self.char_table[i]))

    def irreps(self) -> list["ClassFn"]:
        return [self.irrep(i) for i in range(self.num_classes)]

    def class_indicator(self, c: int) -> "ClassFn":
        return ClassFn(self, tuple(ONE if k == c else ZERO for k in range(self.num_classes)))

    def constant(self, value) -> "ClassFn":
        v = cyclo(value)
        return ClassFn(self, (v,) * self.num_classes)

    def regular(self) -> "ClassFn":
        """The regular character delta = sum_i d_i gamma_i."""
        return sum((self.irrep(i) * d for i, d in enumerate(self.degrees)), self.constant(0))

    def power_class(self, c: int, k: int) -> int:
        g = self.classes[c][0]
        x = 0
        for _ in range(k % self.elem_order[g]):
            x = self.mult[x][g]
        return self.class_of[x]

    @cached_property
    def class_mult(self) -> list[list[list[int]]]:
        """a[i][j][k] = #{(x, y) in C_i x C_j : xy = rep(C_k)}."""
        r = self.num_classes
        out = [[[0] * r for _ in range(r)] for _ in range(r)]
        inv = self.inverse
        for k, cl in enumerate(self.classes):
            z = cl[0]
            for x in range(self.order):
                y = self.mult[inv[x]][z]
                out[self.class_of[x]][self.class_of[y]][k] += 1
        return out

    def natural_character(self) -> "ClassFn":
        """Trace of the defining 2x2 matrices (the SU(2) embedding)."""
        if self.matrices is None:
            raise GroupError(f"{self.name} has no defining 2-dimensional representation")
        return ClassFn(self, [self.matrices[cl[0]][0] + self.matrices[cl[0]][3] for cl in self.classes])

    def check_orthogonality(self) -> list[str]:
        """Exact row and column orthogonality; returns failure messages."""
        errors = []
        r = self.num_classes
        t = self.char_table
        if len(t) != r or any(len(row) != r for row in t):
            return [f"character table is not {r}x{r}"]
        for i in range(r):
            for j in range(r):
                s = sum((t[i][c] * t[j][self.inv_class[c]] * Fraction(1, self.zeta[c]) for c in range(r)), ZERO)
                if s != (1 if i == j else 0):
                    errors.append(f"row orthogonality fails for irreducibles {i},{j}: {s}")
        for c in range(r):
            for c2 in range(r):
                s = sum((t[i][c2] * t[i][self.inv_class[c]] for i in range(r)), ZERO)
                if s != (self.zeta[c] if c == c2 else 0):
                    errors.append(f"column orthogonality fails for classes {c},{c2}: {s}")
        if sum(d * d for d in self.degrees) != self.order:
            errors.append("sum of squared degrees differs from the group order")
        if any(v != 1 for v in t[0]):
            errors.append("irreducible 0 is not the trivial character")
        return errors


def _conjugacy_classes(g: GroupData) -> list[list[int]]:
    n = g.order
    seen = [False] * n
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        cl = sorted({g.mult[g.mult[y][x]][g.inverse[y]] for y in range(n)})
        for e in cl:
            seen[e] = True
        classes.append(cl)
    classes.sort(key=lambda cl: (cl[0] != 0, len(cl), g.elem_order[cl[0]], cl[0]))
    return classes


# -- class functions ----------------------------------------------------------

class ClassFn:
    """A class function on a base group, stored by class values."""

    __slots__ = ("group", "values")

    def __init__(self, group: GroupData, values: Sequence):
        if len(values) != group.num_classes:
            raise GroupError("class function length does not match the number of classes")
        self.group = group
        self.values = tuple(cyclo(v) for v in values)

    def __getitem__(self, c: int) -> Cyclo:
        return self.values[c]

    def _check(self, other: "ClassFn") -> None:
        if other.group is not self.group:
            raise GroupError("class functions on different groups")

    def __add__(self, other: "ClassFn") -> "ClassFn":
        self._check(other)
        return ClassFn(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFn") -> "ClassFn":
        self._check(other)
        return ClassFn(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "ClassFn":
        return ClassFn(self.group, [-a for a in self.values])

    def __mul__(self, other) -> "ClassFn":
        """Pointwise product (tensor product of characters) or scalar multiple."""
        if isinstance(other, ClassFn):
            self._check(other)
            return ClassFn(self.group, [a * b for a, b in zip(self.values, other.values)])
        s = cyclo(other)
        return ClassFn(self.group, [a * s for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFn) and other.group is self.group and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def dual(self) -> "ClassFn":
        """c -> f(c^{-1})."""
        return ClassFn(self.group, [self.values[self.group.inv_class[c]] for c in range(len(self.values))])

    def is_self_dual(self) -> bool:
        return self.dual().values == self.values

    def irreducible_coordinates(self) -> list[Cyclo]:
        """Coefficients s_i in f = sum_i s_i gamma_i."""
        return [standard_pairing(self, g) for g in self.group.irreps()]

    def __repr__(self) -> str:
        return f"ClassFn({self.group.name}, [{', '.join(map(str, self.values))}])"


def standard_pairing(f: ClassFn, g: ClassFn) -> Cyclo:
    """<f, g> = sum_c zeta_c^{-1} f(c) g(c^{-1})."""
    f._check(g)
    grp = f.group
    return sum(
        (f[c] * g[grp.inv_class[c]] * Fraction(1, grp.zeta[c]) for c in range(grp.num_classes)),
        ZERO,
    )


class XiForm:
    """The xi-weighted bilinear form and its Gram matrix A on irreducibles."""

    def __init__(self, xi: ClassFn, label: str = ""):
        if not xi.is_self_dual():
            raise GroupError("xi must be self-dual: xi(c) = xi(c^{-1})")
        self.group = xi.group
        self.xi = xi
        self.label = label
        irr = self.group.irreps()
        r = len(irr)
        self.A = [[self.pair(irr[i], irr[j]) for j in range(r)] for i in range(r)]
        for i in range(r):
            for j in range(i):
                if self.A[i][j] != self.A[j][i]:
                    raise GroupError("weighted Gram matrix is not symmetric")
        self.integral = all(a.is_integer() for row in self.A for a in row)
        self.A_int = [[a.to_int() for a in row] for row in self.A] if self.integral else None

    def pair(self, f: ClassFn, g: ClassFn) -> Cyclo:
        """<f, g>_xi = sum_c zeta_c^{-1} xi(c) f(c) g(c^{-1})."""
        f._check(g)
        grp = self.group
        return sum(
            (
                self.xi[c] * f[c] * g[grp.inv_class[c]] * Fraction(1, grp.zeta[c])
                for c in range(grp.num_classes)
                if self.xi[c]
            ),
            ZERO,
        )

    def pair_real(self, f: ClassFn, g: ClassFn) -> Cyclo:
        """The same form written with the inverse on the first argument."""
        grp = self.group
        return sum(
            (
                self.xi[c] * f[grp.inv_class[c]] * g[c] * Fraction(1, grp.zeta[c])
                for c in range(grp.num_classes)
            ),
            ZERO,
        )

    def gram(self, u: Sequence, v: Sequence) -> Cyclo:
        """<sum u_i gamma_i, sum v_j gamma_j>_xi from irreducible coordinates."""
        acc = ZERO
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj and self.A[i][j]:
                        acc = acc + ui * vj * self.A[i][j]
        return acc

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.xi.values)


def weighted_pairing(xf: XiForm, f: ClassFn, g: ClassFn) -> Cyclo:
    return xf.pair(f, g)


def build_xi_form(group: GroupData, xi: ClassFn) -> XiForm:
    return XiForm(xi)


def trivial_xi(group: GroupData) -> XiForm:
    return XiForm(group.irrep(0), label="trivial")


def mckay_xi(group: GroupData, pi: ClassFn | None = None, d: int = 2) -> XiForm:
    """xi = d*gamma_0 - pi for a faithful self-dual d-dimensional pi."""
    if pi is None:
        pi = group.natural_character()
    if not pi.is_self_dual():
        raise GroupError("pi must be self-dual")
    if pi[0] != d:
        raise GroupError(f"pi has degree {pi[0]}, expected {d}")
    kernel = [c for c in range(group.num_classes) if pi[c] == d]
    if kernel != [0]:
        raise GroupError("pi is not faithful")
    return XiForm(group.constant(d) - pi, label="mckay")


def make_xi(group: GroupData, which: str) -> XiForm:
    if which == "trivial":
        return trivial_xi(group)
    if which == "mckay":
        return mckay_xi(group)
    raise GroupError(f"unknown xi selector {which!r}")


@dataclass
class Report:
    name: str
    passed: bool
    details: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def mckay_eigencheck(xf: XiForm) -> Report:
    """A v_c = xi(c) v_c for every class column v_c of the character table."""
    grp = xf.group
    details = []
    ok = True
    for c in range(grp.num_classes):
        col = [grp.char_table[i][c] for i in range(grp.num_classes)]
        lhs = matvec(xf.A, col)
        good = all(a == xf.xi[c] * b for a, b in zip(lhs, col))
        ok &= good
        details.append({"class": c, "eigenvalue": str(xf.xi[c]), "passed": good})
    return Report("eigencheck", ok, details)


def radical_check(xf: XiForm) -> Report:
    """A delta = 0 for the degree vector, and the kernel of A is one-dimensional."""
    grp = xf.group
    delta = [Cyclo.rational(d) for d in grp.degrees]
    annihilated = all(x == 0 for x in matvec(xf.A, delta))
    kernel = nullspace(xf.A)
    one_dim = len(kernel) == 1
    details = {
        "delta": grp.degrees,
        "A_delta_zero": annihilated,
        "kernel_dim": len(kernel),
        "kernel_basis": [[str(x) for x in v] for v in kernel],
    }
    return Report("radical", annihilated and one_dim, [details])


# -- constructors -------------------------------------------------------------

def _trivial() -> GroupData:
    g = GroupData("trivial", [[0]], matrices=[(ONE, ZERO, ZERO, ONE)])
    g.char_table = [[ONE]]
    return g


def _from_matrices(name: str, gens: Sequence[Matrix]) -> tuple[GroupData, list[Matrix]]:
    elems, _, parent, right = _close(gens)
    table = _cayley_from_closure(parent, right)
    return GroupData(name, table, matrices=elems), elems


def _dlog(m: int) -> dict[Cyclo, int]:
    return {Cyclo.zeta(m, k): k for k in range(m)}


def _cyclic(m: int) -> GroupData:
    if m < 1:
        raise GroupError("cyclic order must be positive")
    if m == 1:
        return _trivial()
    z = Cyclo.zeta(m)
    grp, elems = _from_matrices(f"cyclic:{m}", [(z, ZERO, ZERO, z.inverse())])
    logs = _dlog(m)
    power = [logs[grp.matrices[cl[0]][0]] for cl in grp.classes]
    grp.char_table = [[Cyclo.zeta(m, j * k) for k in power] for j in range(m)]
    grp.conductor = m
    grp.natural = None
    grp.irrep_order_note = "gamma_j(g^k) = zeta_m^(jk), j = 0..m-1"
    return grp


def _binary_dihedral(order: int) -> GroupData:
    if order % 4 or order < 8:
        raise GroupError("binary dihedral order must be 4m with m >= 2")
    m = order // 4
    z = Cyclo.zeta(2 * m)
    a = (z, ZERO, ZERO, z.inverse())
    b = (ZERO, -ONE, ONE, ZERO)
    grp, elems = _from_matrices(f"bd:{order}", [a, b])
    logs = _dlog(2 * m)
    cond = math.lcm(2 * m, 4)
    reps = []
    for cl in grp.classes:
        x = grp.matrices[cl[0]]
        if x[1] == 0:
            reps.append((logs[x[0]], 0))  # a^k
        else:
            reps.append(((-logs[x[2]]) % (2 * m), 1))  # a^k b = [[0, -z^k], [z^-k, 0]]
    if m % 2 == 0:
        ones = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        ones = [(Cyclo.rational(x), Cyclo.rational(y)) for x, y in ones]
    else:
        i = Cyclo.zeta(4)
        ones = [(ONE, ONE), (ONE, -ONE), (-ONE, i), (-ONE, -i)]
    rows = []
    for pa, pb in ones:
        rows.append([pa**k * (pb if e else ONE) for k, e in reps])
    for h in range(1, m):
        rows.append([ZERO if e else Cyclo.zeta(2 * m, h * k) + Cyclo.zeta(2 * m, -h * k) for k, e in reps])
    grp.char_table = rows
    grp.conductor = cond
    grp.natural = 4
    grp.irrep_order_note = "four 1-dimensional characters by (psi(a), psi(b)), then 2-dimensional chi_h, h = 1..m-1"
    return grp


def _quat(a, b, c, d) -> Matrix:
    """Quaternion a + bi + cj + dk as a 2x2 complex matrix."""
    i = Cyclo.zeta(4)
    a, b, c, d = (cyclo(x) for x in (a, b, c, d))
    return (a + b * i, c + d * i, -c + d * i, a - b * i)


def _exceptional(name: str) -> GroupData:
    half = Fraction(1, 2)
    s = _quat(half, half, half, half)
    if name == "bt":
        gens, data, expected, cond = [s, _quat(0, 1, 0, 0)], _tables.BINARY_TETRAHEDRAL, 24, 12
    elif name == "bo":
        r = (Cyclo.zeta(8) + Cyclo.zeta(8, 7)) * half  # 1/sqrt 2
        gens, data, expected, cond = [s, _quat(r, r, 0, 0)], _tables.BINARY_OCTAHEDRAL, 48, 24
    else:
        phi = 1 + Cyclo.zeta(5) + Cyclo.zeta(5, 4)
        t = _quat(phi * half, phi.inverse() * half, half, 0)
        gens, data, expected, cond = [s, t], _tables.BINARY_ICOSAHEDRAL, 120, 60
    grp, elems = _from_matrices(name, gens)
    if grp.order != expected:
        raise GroupError(f"{name} generators produced a group of order {grp.order}")
    keys = []
    for cl in grp.classes:
        x = grp.matrices[cl[0]]
        keys.append((grp.elem_order[cl[0]], len(cl), x[0] + x[3]))
    col_keys = [(o, sz, _tables.value(t)) for o, sz, t in data["columns"]]
    rows = [[_tables.value(v) for v in row] for row in data["rows"]]
    grp.char_table = _match_columns(grp, keys, col_keys, rows)
    grp.conductor = cond
    grp.natural = data["natural"]
    grp.irrep_order_note = "fixed table order"
    return grp


def _match_columns(grp: GroupData, keys, col_keys, rows):
    """Assign stored table columns to actual classes.

    Columns sharing a key are permuted until the table satisfies the class
    multiplication identities and both orthogonality relations exactly.
    """
    buckets: dict = {}
    for c, k in enumerate(keys):
        buckets.setdefault(k, []).append(c)
    col_buckets: dict = {}
    for j, k in enumerate(col_keys):
        col_buckets.setdefault(k, []).append(j)
    if sorted(map(len, buckets.values())) != sorted(map(len, col_buckets.values())) or set(buckets) != set(col_buckets):
        raise GroupError(f"{grp.name}: class data does not match the stored table")
    options = [list(itertools.permutations(col_buckets[k])) for k in buckets]
    bucket_keys = list(buckets)
    for choice in itertools.product(*options):
        col_for_class = [0] * len(keys)
        for k, perm in zip(bucket_keys, choice):
            for c, j in zip(buckets[k], perm):
                col_for_class[c] = j
        table = [[row[col_for_class[c]] for c in range(len(keys))] for row in rows]
        grp.char_table = table
        if not grp.check_orthogonality() and _class_algebra_ok(grp):
            return table
    raise GroupError(f"{grp.name}: no column assignment gives a consistent character table")


def _class_algebra_ok(grp: GroupData) -> bool:
    """omega(C_i) omega(C_j) = sum_k a_ijk omega(C_k) for every irreducible."""
    a = grp.class_mult
    r = grp.num_classes
    for row in grp.char_table:
        d = row[0]
        omega = [row[c] * grp.class_size[c] / d for c in range(r)]
        for i in range(r):
            for j in range(i, r):
                rhs = sum((omega[k] * a[i][j][k] for k in range(r) if a[i][j][k]), ZERO)
                if omega[i] * omega[j] != rhs:
                    return False
    return True


# -- Cayley-table input -------------------------------------------------------

def load_cayley(path: str) -> list[list[int]]:
    """Read a Cayley table: JSON (a list of rows, or {"table": rows}) or whitespace text."""
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    if isinstance(data, dict):
        data = data["table"]
    return [list(map(int, row)) for row in data]


def from_cayley(table: list[list[int]], name: str = "cayley") -> GroupData:
    n = len(table)
    if n == 0 or n > 200 or any(len(row) != n for row in table):
        raise GroupError("Cayley table must be square with order between 1 and 200")
    if any(sorted(row) != list(range(n)) for row in table):
        raise GroupError("Cayley table rows must be permutations")
    if any(sorted(table[i][j] for i in range(n)) != list(range(n)) for j in range(n)):
        raise GroupError("Cayley table columns must be permutations")
    ident = next((i for i in range(n) if table[i] == list(range(n))), None)
    if ident is None:
        raise GroupError("Cayley table has no identity element")
    if ident != 0:
        # relabel so the identity is element 0
        perm = [ident] + [i for i in range(n) if i != ident]
        pos = {e: i for i, e in enumerate(perm)}
        table = [[pos[table[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]
    for x, y, z in itertools.product(range(n), repeat=3) if n <= 40 else _sample_triples(n):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise GroupError("Cayley table is not associative")
    grp = GroupData(name, table)
    grp.char_table = _burnside_table(grp)
    grp.conductor = grp.exponent
    grp.irrep_order_note = "trivial first, then by degree, then lexicographic in exact values"
    errors = grp.check_orthogonality()
    if errors:
        raise GroupError(f"{name}: " + "; ".join(errors[:3]))
    return grp


def _sample_triples(n: int):
    rng = random.Random(0)
    for _ in range(20000):
        yield rng.randrange(n), rng.randrange(n), rng.randrange(n)


def _burnside_table(grp: GroupData) -> list[list[Cyclo]]:
    """Character table via the class-multiplication algebra.

    The simultaneous eigenvectors of the class matrices are found numerically
    from a random linear combination, then each value is converted to an exact
    sum of roots of unity through the eigenvalue multiplicities of the element.
    """
    import numpy as np

    r = grp.num_classes
    a = np.array(grp.class_mult, dtype=float)  # a[i][j][k]
    rng = np.random.default_rng(12345)
    for _attempt in range(20):
        coeffs = rng.standard_normal(r)
        m = np.einsum("i,ijk->jk", coeffs, a)
        vals, vecs = np.linalg.eig(m)
        if min(abs(vals[i] - vals[j]) for i in range(r) for j in range(i)) > 1e-6 if r > 1 else True:
            break
    else:
        raise GroupError("could not separate the class-algebra eigenvectors")
    sizes = np.array(grp.class_size, dtype=float)
    numeric = []
    for col in range(r):
        w = vecs[:, col] / vecs[0, col]  # omega values, omega(identity class) = 1
        norm = float(np.real(np.sum(w * np.conj(w) / sizes)))
        d = math.sqrt(grp.order / norm)
        numeric.append(d * w / sizes)
    rows = [_exactify(grp, chi) for chi in numeric]
    rows.sort(key=lambda row: (row[0].to_int(), [v.embed(grp.exponent).sort_key() for v in row]))
    trivial = next(i for i, row in enumerate(rows) if all(v == 1 for v in row))
    rows.insert(0, rows.pop(trivial))
    return rows


def _exactify(grp: GroupData, chi) -> list[Cyclo]:
    out = []
    for c, cl in enumerate(grp.classes):
        o = grp.elem_order[cl[0]]
        powers = [chi[grp.power_class(c, t)] for t in range(o)]
        value = ZERO
        for j in range(o):
            mult = sum(powers[t] * cmath.exp(-2j * math.pi * j * t / o) for t in range(o)) / o
            k = round(mult.real)
            if abs(mult - k) > 1e-4 or k < 0:
                raise GroupError("numerical character value is not a sum of roots of unity")
            if k:
                value = value + Cyclo.zeta(o, j) * k
        out.append(value)
    return out


# -- descriptors --------------------------------------------------------------

_CACHE: dict[str, GroupData] = {}


def build_group(spec: str) -> GroupData:
    """Build a group from a descriptor such as ``"cyclic:3"`` or ``"bd:8"``."""
    spec = spec.strip()
    if spec in _CACHE:
        return _CACHE[spec]
    name, _, arg = spec.partition(":")
    aliases = {
        "binary_dihedral": "bd",
        "binary_tetrahedral": "bt",
        "binary_octahedral": "bo",
        "binary_icosahedral": "bi",
    }
    name = aliases.get(name, name)
    try:
        if name == "trivial" and not arg:
            grp = _trivial()
        elif name == "cyclic":
            grp = _cyclic(int(arg))
        elif name == "bd":
            grp = _binary_dihedral(int(arg))
        elif name in ("bt", "bo", "bi") and not arg:
            grp = _exceptional(name)
        elif name == "cayley":
            grp = from_cayley(load_cayley(arg), name=spec)
        else:
            raise GroupError(f"unknown group descriptor {spec!r}")
    except ValueError as exc:
        if isinstance(exc, GroupError):
            raise
        raise GroupError(f"malformed group descriptor {spec!r}") from exc
    errors = grp.check_orthogonality()
    if errors:
        raise GroupError(f"{spec}: corrupted character table: " + "; ".join(errors[:3]))
    _CACHE[spec] = grp
    return grp
