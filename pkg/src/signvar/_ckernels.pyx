# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``signvar._pykernels``.

Coefficients stay Python ints (unbounded); the gain is in loop overhead and
in small-int shortcuts where a C long cannot overflow.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE


def sign_variations(seq):
    cdef Py_ssize_t count = 0
    cdef int prev = 0
    for a in seq:
        if a > 0:
            if prev < 0:
                count += 1
            prev = 1
        elif a < 0:
            if prev > 0:
                count += 1
            prev = -1
    return count


cdef list _shift_inplace(list c, object p):
    cdef Py_ssize_t n = PyList_GET_SIZE(c)
    cdef Py_ssize_t i, j
    cdef object acc
    for i in range(n - 1):
        acc = c[n - 1]
        for j in range(n - 2, i - 1, -1):
            acc = <object>PyList_GET_ITEM(c, j) + p * acc
            c[j] = acc
    return c


cdef list _shift_inplace_unit(list c, int sgn):
    # p = +1 or -1: multiplication drops out of the inner loop
    cdef Py_ssize_t n = PyList_GET_SIZE(c)
    cdef Py_ssize_t i, j
    cdef object acc
    for i in range(n - 1):
        acc = c[n - 1]
        for j in range(n - 2, i - 1, -1):
            if sgn > 0:
                acc = <object>PyList_GET_ITEM(c, j) + acc
            else:
                acc = <object>PyList_GET_ITEM(c, j) - acc
            c[j] = acc
    return c


def taylor_shift(coeffs, p):
    cdef list c = list(coeffs)
    if p == 0 or len(c) < 2:
        return c
    if p == 1:
        return _shift_inplace_unit(c, 1)
    if p == -1:
        return _shift_inplace_unit(c, -1)
    return _shift_inplace(c, p)


def scaled_shift(coeffs, p, q):
    cdef Py_ssize_t n = len(coeffs) - 1
    cdef Py_ssize_t j
    if q == 1:
        return taylor_shift(coeffs, p)
    cdef list c = [0] * (n + 1)
    w = 1
    for j in range(n, -1, -1):
        c[j] = coeffs[j] * w
        w *= q
    if p == 0 or n < 1:
        return c
    return _shift_inplace(c, p)


def horner(coeffs, p, q):
    cdef list c = list(coeffs)
    cdef Py_ssize_t j
    acc = 0
    w = 1
    for j in range(PyList_GET_SIZE(c) - 1, -1, -1):
        acc = acc * p + <object>PyList_GET_ITEM(c, j) * w
        w *= q
    return acc


def mul(a, b):
    cdef list la = list(a)
    cdef list lb = list(b)
    cdef Py_ssize_t na = PyList_GET_SIZE(la)
    cdef Py_ssize_t nb = PyList_GET_SIZE(lb)
    cdef Py_ssize_t i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = <object>PyList_GET_ITEM(la, i)
        if x:
            for j in range(nb):
                out[i + j] += x * <object>PyList_GET_ITEM(lb, j)
    return out
