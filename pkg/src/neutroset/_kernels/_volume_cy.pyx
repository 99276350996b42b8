# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel for Monte-Carlo volume estimation.

Must stay operation-for-operation identical to ``_volume_py.py`` so both
backends produce bit-identical hit counts on the same sample block.
"""

from libc.math cimport pow


def count_satisfying(double[:, ::1] samples, double exponent, double bound,
                     double tol, Py_ssize_t columns=-1):
    cdef Py_ssize_t nrows = samples.shape[0]
    cdef Py_ssize_t ncols = samples.shape[1] if columns < 0 else columns
    cdef double limit = bound + tol
    cdef double acc
    cdef Py_ssize_t i, j
    cdef long hits = 0

    if exponent == 1.0:
        for i in range(nrows):
            acc = 0.0
            for j in range(ncols):
                acc = acc + samples[i, j]
            if acc <= limit:
                hits += 1
    elif exponent == 2.0:
        for i in range(nrows):
            acc = 0.0
            for j in range(ncols):
                acc = acc + samples[i, j] * samples[i, j]
            if acc <= limit:
                hits += 1
    else:
        for i in range(nrows):
            acc = 0.0
            for j in range(ncols):
                acc = acc + pow(samples[i, j], exponent)
            if acc <= limit:
                hits += 1
    return hits
