# cython: language_level=3
"""Compiled kernels for the hot inner loops.

Mirrors ``spinberry.kernels._numpy``; see that module for the contract.
Plain C loops over contiguous complex128 buffers, fixed summation order.
"""

import numpy as np


def hubbard_apply(amp, double t, double u, bint periodic):
    cdef const double complex[:, ::1] a = np.ascontiguousarray(amp, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.zeros((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double complex acc
    for i in range(n):
        for j in range(n):
            acc = 0
            if i > 0:
                acc = acc + a[i - 1, j]
            if i < n - 1:
                acc = acc + a[i + 1, j]
            if j > 0:
                acc = acc + a[i, j - 1]
            if j < n - 1:
                acc = acc + a[i, j + 1]
            if periodic:
                if i == 0:
                    acc = acc + a[n - 1, j]
                if i == n - 1:
                    acc = acc + a[0, j]
                if j == 0:
                    acc = acc + a[i, n - 1]
                if j == n - 1:
                    acc = acc + a[i, 0]
            out[i, j] = -t * acc
    if u != 0.0:
        for i in range(n):
            out[i, i] = out[i, i] + u * a[i, i]
    return out_arr


def cross_overlap_sum(amp, a_idx, b_idx):
    cdef const double complex[:, ::1] a = np.ascontiguousarray(amp, dtype=np.complex128)
    cdef const long long[::1] ia = np.ascontiguousarray(a_idx, dtype=np.int64)
    cdef const long long[::1] ib = np.ascontiguousarray(b_idx, dtype=np.int64)
    cdef Py_ssize_t p, q
    cdef double complex acc = 0
    for p in range(ia.shape[0]):
        for q in range(ib.shape[0]):
            acc = acc + a[ia[p], ib[q]].conjugate() * a[ib[q], ia[p]]
    return complex(acc)


def sector_weights(amp, a_idx, b_idx):
    cdef const double complex[:, ::1] a = np.ascontiguousarray(amp, dtype=np.complex128)
    cdef const long long[::1] ia = np.ascontiguousarray(a_idx, dtype=np.int64)
    cdef const long long[::1] ib = np.ascontiguousarray(b_idx, dtype=np.int64)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, p, q
    cdef double w_nf = 0, w_fl = 0, total = 0
    cdef double complex z
    for i in range(n):
        for j in range(n):
            z = a[i, j]
            total += z.real * z.real + z.imag * z.imag
    for p in range(ia.shape[0]):
        for q in range(ib.shape[0]):
            z = a[ia[p], ib[q]]
            w_nf += z.real * z.real + z.imag * z.imag
            z = a[ib[q], ia[p]]
            w_fl += z.real * z.real + z.imag * z.imag
    return w_nf, w_fl, total - w_nf - w_fl
