# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled assignment sweep.

Requires at most 64 clauses and variable bit positions below 64; the
dispatcher in ``kernels`` routes anything larger to the Python version.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()


def sweep_codes(pos, neg, var_bits, uint64_t base):
    cdef const uint64_t[::1] p = np.ascontiguousarray(pos, dtype=np.uint64)
    cdef const uint64_t[::1] q = np.ascontiguousarray(neg, dtype=np.uint64)
    cdef const int64_t[::1] vb = np.ascontiguousarray(var_bits, dtype=np.int64)
    cdef Py_ssize_t m = p.shape[0]
    cdef Py_ssize_t k = vb.shape[0]
    if k > 40:
        raise ValueError("refusing to sweep more than 2^40 assignments")
    cdef Py_ssize_t total = (<Py_ssize_t>1) << k
    out = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] o = out
    cdef uint64_t[64] weight
    cdef Py_ssize_t t, i, j
    cdef uint64_t a, notA, code
    # weight[j] is the variable bit toggled by bit j of the assignment index
    for j in range(k):
        weight[j] = (<uint64_t>1) << vb[k - 1 - j]
    with nogil:
        for t in range(total):
            a = base
            for j in range(k):
                if (t >> j) & 1:
                    a |= weight[j]
            notA = ~a
            code = 0
            for i in range(m):
                if (p[i] & a) or (q[i] & notA):
                    code |= (<uint64_t>1) << i
            o[t] = code
    return out
