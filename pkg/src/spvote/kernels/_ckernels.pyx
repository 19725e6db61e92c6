# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; same contracts as spvote.kernels.pure."""

from libc.stdint cimport int64_t, int8_t, uint8_t

import numpy as np

BACKEND = "cython"


def bloc_votes(const int64_t[::1] counts, const int8_t[:, ::1] pos, int k):
    cdef Py_ssize_t r = pos.shape[0]
    cdef Py_ssize_t m = pos.shape[1]
    out_arr = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t i, c
    cdef int64_t w
    for i in range(r):
        w = counts[i]
        if w == 0:
            continue
        for c in range(m):
            if pos[i, c] < k:
                out[c] += w
    return out_arr


def pairwise_counts(const int64_t[::1] counts, const int8_t[:, ::1] pos):
    cdef Py_ssize_t r = pos.shape[0]
    cdef Py_ssize_t m = pos.shape[1]
    out_arr = np.zeros((m, m), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t i, a, b
    cdef int64_t w
    cdef int8_t pa
    for i in range(r):
        w = counts[i]
        if w == 0:
            continue
        for a in range(m):
            pa = pos[i, a]
            for b in range(a + 1, m):
                if pa < pos[i, b]:
                    out[a, b] += w
                else:
                    out[b, a] += w
    return out_arr


def block_sizes(const int64_t[::1] counts, const int8_t[:, ::1] pos,
                const uint8_t[::1] members):
    cdef Py_ssize_t r = pos.shape[0]
    cdef Py_ssize_t m = pos.shape[1]
    out_arr = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t i, c
    cdef int64_t w
    cdef int8_t wmin, p
    for i in range(r):
        w = counts[i]
        if w == 0:
            continue
        wmin = 127
        for c in range(m):
            if members[c]:
                p = pos[i, c]
                if p < wmin:
                    wmin = p
        for c in range(m):
            if not members[c] and pos[i, c] < wmin:
                out[c] += w
    return out_arr
