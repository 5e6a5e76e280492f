# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclotomic kernels.

Same contract as ``_kernels_py``. Inputs are arbitrary-precision Python ints;
when a cheap bound shows every intermediate fits in int64 the product is done
in C, otherwise it falls back to the object path.
"""

from libc.stdlib cimport malloc, free

from wreathvo import _kernels_py

cdef object _LIMIT = 1 << 62


cdef inline object _absmax(tuple v):
    cdef object m = 0
    cdef object x
    for x in v:
        if x < 0:
            x = -x
        if x > m:
            m = x
    return m


def mulmod(tuple a, tuple b, Py_ssize_t phi, list red_hi, const long long[:] red_flat, long long maxred):
    cdef Py_ssize_t i, j, k
    cdef long long x, y, c
    cdef long long *ca
    cdef long long *cb
    cdef long long *conv
    if phi == 1:
        return (a[0] * b[0],)
    amax = _absmax(a)
    bmax = _absmax(b)
    if amax * bmax * phi * (1 + maxred * phi) >= _LIMIT:
        return _kernels_py.mulmod(a, b, phi, red_hi)
    ca = <long long *> malloc(phi * sizeof(long long))
    cb = <long long *> malloc(phi * sizeof(long long))
    conv = <long long *> malloc((2 * phi - 1) * sizeof(long long))
    try:
        for i in range(phi):
            ca[i] = a[i]
            cb[i] = b[i]
        for i in range(2 * phi - 1):
            conv[i] = 0
        for i in range(phi):
            x = ca[i]
            if x != 0:
                for j in range(phi):
                    y = cb[j]
                    if y != 0:
                        conv[i + j] += x * y
        for k in range(phi - 1):
            c = conv[phi + k]
            if c != 0:
                for j in range(phi):
                    y = red_flat[k * phi + j]
                    if y != 0:
                        conv[j] += c * y
        return tuple([conv[i] for i in range(phi)])
    finally:
        free(ca)
        free(cb)
        free(conv)


def reduce_exponents(terms, Py_ssize_t phi, list red_all):
    return _kernels_py.reduce_exponents(terms, phi, red_all)
