"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Cyclo` is stored as integer numerators in the power basis
``1, z, ..., z**(phi(N)-1)`` reduced modulo the N-th cyclotomic polynomial, plus
one positive common denominator. Rational values are always normalised to
conductor 1, so the very common rational case never touches the polynomial
kernels.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from array import array

from wreathvo import kernels


class CycloError(ArithmeticError):
    pass


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def mobius(n: int) -> int:
    sign, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    if m > 1:
        sign = -sign
    return sign


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]  # den is monic
        out[k] = c
        if c:
            for i, p in enumerate(den):
                num[k + i] -= c * p
    assert not any(num[:dd]), "non-exact polynomial division"
    return out


class _Field:
    """Reduction tables for one conductor."""

    __slots__ = ("n", "phi", "red_all", "red_hi", "red_flat", "maxred", "trace_weights")

    def __init__(self, n: int):
        self.n = n
        phi = self.phi = euler_phi(n)
        poly = cyclotomic_poly(n)
        dense = []
        vec = [0] * phi
        vec[0] = 1
        for e in range(max(n, 2 * phi - 1)):
            dense.append(tuple(vec))
            # multiply by z and fold the overflow back in
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(phi):
                    vec[i] -= top * poly[i]
        self.red_all = [[(j, r) for j, r in enumerate(dense[e]) if r] for e in range(n)]
        self.red_hi = [[(j, r) for j, r in enumerate(dense[phi + k]) if r] for k in range(phi - 1)]
        flat = [r for k in range(phi - 1) for r in dense[phi + k]]
        self.red_flat = array("q", flat or [0])
        self.maxred = max((abs(r) for r in flat), default=0)
        # normalised trace of z**e is mu(n/g)/phi(n/g), g = gcd(e, n)
        self.trace_weights = tuple(
            Fraction(mobius(n // math.gcd(e, n)), euler_phi(n // math.gcd(e, n))) for e in range(phi)
        )


_FIELDS: dict[int, _Field] = {}


def _field(n: int) -> _Field:
    f = _FIELDS.get(n)
    if f is None:
        f = _FIELDS[n] = _Field(n)
    return f


class Cyclo:
    """An element of Q(zeta_N). Immutable."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n: int = 1, coeffs=(0,)):
        if n < 1:
            raise CycloError("conductor must be positive")
        phi = euler_phi(n)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            # accept any exponent range by reducing z**e directly
            f = _field(n)
            den = math.lcm(*(c.denominator for c in coeffs))
            terms = [(e % n, int(c * den)) for e, c in enumerate(coeffs)]
            num = kernels.reduce_exponents(terms, phi, f.red_all)
        else:
            coeffs += [Fraction(0)] * (phi - len(coeffs))
            den = math.lcm(*(c.denominator for c in coeffs))
            num = tuple(int(c * den) for c in coeffs)
        _init(self, n, num, den)

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, value) -> "Cyclo":
        value = Fraction(value)
        return _make(1, (value.numerator,), value.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclo":
        """The root of unity zeta_n**k."""
        f = _field(n)
        return _make(n, _dense(f.red_all[k % n], f.phi), 1)

    @classmethod
    def coerce(cls, x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        if isinstance(x, (int, Fraction)):
            return _make(1, (x.numerator,), x.denominator) if isinstance(x, Fraction) else _make(1, (x,), 1)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclo")

    # -- inspection ---------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_rational(self) -> bool:
        return self.n == 1

    def is_integer(self) -> bool:
        return self.n == 1 and self.den == 1

    def to_fraction(self) -> Fraction:
        if self.n != 1:
            raise CycloError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def to_int(self) -> int:
        if self.n != 1 or self.den != 1:
            raise CycloError(f"{self} is not an integer")
        return self.num[0]

    def __complex__(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.n), math.sin(2 * math.pi / self.n))
        return sum(c * z**e for e, c in enumerate(self.num)) / self.den

    def __bool__(self) -> bool:
        return any(self.num)

    # -- field structure ----------------------------------------------

    def embed(self, m: int) -> "Cyclo":
        """The same element written with conductor ``m`` (a multiple of N)."""
        if m % self.n:
            raise CycloError(f"conductor {self.n} does not divide {m}")
        if m == self.n:
            return self
        step = m // self.n
        f = _field(m)
        terms = [((e * step) % m, c) for e, c in enumerate(self.num) if c]
        # bypass _make: an embedded element keeps the requested conductor
        out = object.__new__(Cyclo)
        out.n, out.num, out.den, out._hash = m, kernels.reduce_exponents(terms, f.phi, f.red_all), self.den, None
        return out

    def galois(self, k: int) -> "Cyclo":
        """Apply the automorphism zeta -> zeta**k (k coprime to N)."""
        if math.gcd(k, self.n) != 1:
            raise CycloError(f"{k} is not a unit mod {self.n}")
        if self.n == 1:
            return self
        f = _field(self.n)
        terms = [((e * k) % self.n, c) for e, c in enumerate(self.num) if c]
        return _make(self.n, kernels.reduce_exponents(terms, f.phi, f.red_all), self.den)

    def conjugate(self) -> "Cyclo":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Absolute norm N_{Q(zeta_N)/Q}."""
        prod = self
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        return prod.to_fraction()

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the field degree; independent of the conductor."""
        if self.n == 1:
            return Fraction(self.num[0], self.den)
        w = _field(self.n).trace_weights
        return sum((c * t for c, t in zip(self.num, w) if c), Fraction(0)) / self.den

    def inverse(self) -> "Cyclo":
        if not any(self.num):
            raise ZeroDivisionError("division by zero in Q(zeta_N)")
        if self.n == 1:
            return _make(1, (self.den,), self.num[0])
        cof = Cyclo.rational(1)
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                cof = cof * self.galois(k)
        nrm = (self * cof).to_fraction()
        return cof * (1 / nrm)

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "Cyclo":
        return _make_raw(self.n, tuple(-c for c in self.num), self.den)

    def __pos__(self) -> "Cyclo":
        return self

    def __add__(self, other) -> "Cyclo":
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self, other
        if a.n != b.n:
            if b.n == 1:
                return _add_rational(a, b)
            if a.n == 1:
                return _add_rational(b, a)
            a, b = _common(a, b)
        if a.den == b.den:
            return _make(a.n, tuple(x + y for x, y in zip(a.num, b.num)), a.den)
        ad, bd = a.den, b.den
        return _make(a.n, tuple(x * bd + y * ad for x, y in zip(a.num, b.num)), ad * bd)

    __radd__ = __add__

    def __sub__(self, other) -> "Cyclo":
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyclo":
        return (-self) + other

    def __mul__(self, other) -> "Cyclo":
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self, other
        if a.n != b.n:
            if b.n == 1:
                return _scale(a, b.num[0], b.den)
            if a.n == 1:
                return _scale(b, a.num[0], a.den)
            a, b = _common(a, b)
        if a.n == 1:
            return _make(1, (a.num[0] * b.num[0],), a.den * b.den)
        f = _field(a.n)
        num = kernels.mulmod(a.num, b.num, f.phi, f.red_hi, f.red_flat, f.maxred)
        return _make(a.n, num, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclo":
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        if other.n == 1:
            if not other.num[0]:
                raise ZeroDivisionError("division by zero in Q(zeta_N)")
            return _scale(self, other.den, other.num[0])
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Cyclo":
        return Cyclo.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclo":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyclo):
            if isinstance(other, (int, Fraction)):
                other = Cyclo.coerce(other)
            else:
                return NotImplemented
        if self.n == other.n:
            return self.den == other.den and self.num == other.num
        a, b = _common(self, other)
        return a.den == b.den and a.num == b.num

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self.normalized_trace())
        return h

    def sort_key(self) -> tuple:
        return (self.n, self.num, self.den)

    # -- text form ----------------------------------------------------

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"Cyclo({to_string(self)!r})"


def _init(obj: Cyclo, n: int, num: tuple, den: int) -> None:
    out = _make(n, num, den)
    obj.n, obj.num, obj.den, obj._hash = out.n, out.num, out.den, None


def _make(n: int, num: tuple, den: int) -> Cyclo:
    """Normalise (gcd, sign of denominator, rational collapse) and build."""
    if n != 1 and not any(num[1:]):
        n, num = 1, num[:1]
    g = math.gcd(den, *num)
    if den < 0:
        g = -g
    if g != 1:
        num = tuple(c // g for c in num)
        den //= g
    if not any(num):
        den = 1
    return _make_raw(n, num, den)


def _make_raw(n: int, num: tuple, den: int) -> Cyclo:
    out = object.__new__(Cyclo)
    out.n, out.num, out.den, out._hash = n, num, den, None
    return out


def _scale(a: Cyclo, p: int, q: int) -> Cyclo:
    return _make(a.n, tuple(c * p for c in a.num), a.den * q)


def _add_rational(a: Cyclo, r: Cyclo) -> Cyclo:
    num = list(x * r.den for x in a.num)
    num[0] += r.num[0] * a.den
    return _make(a.n, tuple(num), a.den * r.den)


def _common(a: Cyclo, b: Cyclo) -> tuple[Cyclo, Cyclo]:
    m = math.lcm(a.n, b.n)
    return a.embed(m), b.embed(m)


def _dense(sparse, phi):
    out = [0] * phi
    for j, r in sparse:
        out[j] = r
    return tuple(out)


ZERO = Cyclo.rational(0)
ONE = Cyclo.rational(1)


def cyclo(x) -> Cyclo:
    """Coerce ints, Fractions, strings or Cyclo values."""
    if isinstance(x, str):
        return parse(x)
    return Cyclo.coerce(x)


def embed(a: Cyclo, m: int) -> Cyclo:
    return a.embed(m)


def cyclo_arith(a: Cyclo, b: Cyclo, op: str) -> Cyclo:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# -- serialisation ------------------------------------------------------

def to_string(a: Cyclo) -> str:
    """``"c0 + c1*z + c2*z^2 @N"``; rationals render as ``"p/q"``."""
    terms = []
    for e, c in enumerate(a.num):
        if not c:
            continue
        coef = str(Fraction(c, a.den))
        if e == 0:
            terms.append(coef)
        elif e == 1:
            terms.append(f"{coef}*z")
        else:
            terms.append(f"{coef}*z^{e}")
    body = " + ".join(terms) if terms else "0"
    return body if a.n == 1 else f"{body} @{a.n}"


_TERM = re.compile(r"^([+-]?\d+(?:/\d+)?)(?:\*z(?:\^(\d+))?)?$")


def parse(text: str) -> Cyclo:
    text = text.strip()
    n = 1
    if "@" in text:
        text, cond = text.rsplit("@", 1)
        n = int(cond)
        text = text.strip()
    coeffs: dict[int, Fraction] = {}
    for raw in text.split(" + "):
        raw = raw.replace(" ", "")
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"malformed cyclotomic term {raw!r}")
        e = 0 if "z" not in raw else int(m.group(2) or 1)
        coeffs[e] = coeffs.get(e, Fraction(0)) + Fraction(m.group(1))
    if n == 1 and any(e for e in coeffs if coeffs[e]):
        raise ValueError("z terms require a conductor annotation")
    size = max(coeffs) + 1 if coeffs else 1
    return Cyclo(n, [coeffs.get(e, 0) for e in range(size)])
