# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled per-strip sort and greedy stabbing scan."""

import numpy as np
cimport numpy as cnp
from libcpp.algorithm cimport sort
from libcpp.pair cimport pair
from libcpp.vector cimport vector

cnp.import_array()


def stab_strip_ranges(const double[::1] lo, const double[::1] hi, const cnp.int64_t[::1] starts):
    """Greedy stabs for segments grouped into contiguous strip ranges.

    Strip ``s`` owns positions ``starts[s]:starts[s+1]``. Each range is sorted
    by ``lo`` descending (ties by position) and scanned; the returned positions
    are the segments whose ``lo`` becomes a stab, strip by strip, stabs
    descending.
    """
    cdef Py_ssize_t n = lo.shape[0]
    cdef Py_ssize_t ns = starts.shape[0] - 1
    cdef Py_ssize_t s, i, a, b, m = 0
    cdef double cur
    if hi.shape[0] != n:
        raise ValueError("lo and hi must have equal length")
    if ns < 0 or starts[0] != 0 or starts[ns] != n:
        raise ValueError("starts must run from 0 to len(lo)")
    for s in range(ns):
        if starts[s + 1] < starts[s]:
            raise ValueError("starts must be nondecreasing")
    out = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    # (-lo, position) ascending == lo descending, ties by position
    cdef vector[pair[double, Py_ssize_t]] buf
    buf.resize(n)
    with nogil:
        for s in range(ns):
            a = starts[s]
            b = starts[s + 1]
            if a == b:
                continue
            for i in range(a, b):
                buf[i].first = -lo[i]
                buf[i].second = i
            sort(buf.begin() + a, buf.begin() + b)
            cur = lo[buf[a].second]
            o[m] = buf[a].second
            m += 1
            for i in range(a + 1, b):
                if hi[buf[i].second] < cur:
                    cur = lo[buf[i].second]
                    o[m] = buf[i].second
                    m += 1
    return out[:m]
