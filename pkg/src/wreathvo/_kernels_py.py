"""Pure-Python kernels for power-basis cyclotomic arithmetic.

These are the reference implementations; ``_kernels.pyx`` mirrors them with an
int64 fast path. Both operate on integer numerator tuples of length ``phi``.
"""

from __future__ import annotations


def mulmod(a, b, phi, red_hi, red_flat=None, maxred=0):
    """Product of two numerator vectors reduced modulo the cyclotomic polynomial.

    ``red_hi[k]`` is a sparse list of ``(j, r)`` pairs giving z**(phi + k) in the
    power basis. ``red_flat``/``maxred`` are accepted for signature parity with
    the compiled kernel and ignored here.
    """
    if phi == 1:
        return (a[0] * b[0],)
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        x = a[i]
        if x:
            for j in range(phi):
                y = b[j]
                if y:
                    conv[i + j] += x * y
    out = conv[:phi]
    for k in range(phi - 1):
        c = conv[phi + k]
        if c:
            for j, r in red_hi[k]:
                out[j] += c * r
    return tuple(out)


def reduce_exponents(terms, phi, red_all):
    """Reduce a sparse sum ``sum(c * z**e for e, c in terms)``.

    ``red_all[e]`` is the sparse reduced form of z**e for 0 <= e < N; exponents
    must already be taken mod N.
    """
    out = [0] * phi
    for e, c in terms:
        if c:
            for j, r in red_all[e]:
                out[j] += c * r
    return tuple(out)

