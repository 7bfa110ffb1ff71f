# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython sign-enumeration kernels (Gray-code incremental sums)."""

import numpy as np

from libc.stdlib cimport free, malloc


cdef inline int _trailing_zeros(unsigned long long v) nogil:
    cdef int c = 0
    while not (v & 1):
        v >>= 1
        c += 1
    return c


def tail_count(double[::1] coeffs, double x, double tie):
    """(#outcomes with sum >= x - tie, #outcomes with |sum - x| <= tie)."""
    cdef int n = coeffs.shape[0]
    cdef unsigned long long total = 1ULL << n
    cdef unsigned long long i
    cdef unsigned long long n_ge = 0, n_atom = 0
    cdef double s = 0.0
    cdef double lo = x - tie, hi = x + tie
    cdef int j
    cdef signed char* signs = <signed char*> malloc(n * sizeof(signed char))
    if signs == NULL:
        raise MemoryError()
    try:
        for j in range(n):
            signs[j] = -1
            s -= coeffs[j]
        if s >= lo:
            n_ge += 1
            if s <= hi:
                n_atom += 1
        for i in range(1, total):
            j = _trailing_zeros(i)
            signs[j] = -signs[j]
            s += 2.0 * signs[j] * coeffs[j]
            if s >= lo:
                n_ge += 1
                if s <= hi:
                    n_atom += 1
    finally:
        free(signs)
    return int(n_ge), int(n_atom)


def signed_sums(double[::1] coeffs):
    """All 2^n signed sums in Gray-code order."""
    cdef int n = coeffs.shape[0]
    cdef unsigned long long total = 1ULL << n
    out = np.empty(total, dtype=np.float64)
    cdef double[::1] view = out
    cdef unsigned long long i
    cdef double s = 0.0
    cdef int j
    cdef signed char* signs = <signed char*> malloc(n * sizeof(signed char))
    if signs == NULL:
        raise MemoryError()
    try:
        for j in range(n):
            signs[j] = -1
            s -= coeffs[j]
        view[0] = s
        for i in range(1, total):
            j = _trailing_zeros(i)
            signs[j] = -signs[j]
            s += 2.0 * signs[j] * coeffs[j]
            view[i] = s
    finally:
        free(signs)
    return out
