# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; mirrors _kernels_py exactly."""

from libc.stdint cimport int32_t, int64_t, uint8_t

import numpy as np

BACKEND = "cython"

INDIGENOUS = 0
BILATERAL = 1
OTHER = 2
FOCAL_ABSENT = 255


def classify_labels(offsets, country_ids, focal_id, partner_id):
    cdef int64_t[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef int32_t[::1] ids = np.ascontiguousarray(country_ids, dtype=np.int32)
    cdef Py_ssize_t n = off.shape[0] - 1
    out = np.empty(n, dtype=np.uint8)
    cdef uint8_t[::1] labels = out
    cdef int32_t focal = focal_id
    cdef int32_t partner = partner_id
    cdef Py_ssize_t i, j
    cdef int64_t start, stop
    cdef bint has_focal, has_partner
    cdef int32_t cid
    for i in range(n):
        start = off[i]
        stop = off[i + 1]
        has_focal = False
        has_partner = False
        for j in range(start, stop):
            cid = ids[j]
            if cid == focal:
                has_focal = True
            elif cid == partner:
                has_partner = True
        if not has_focal:
            labels[i] = 255
        elif stop - start == 1:
            labels[i] = 0
        elif has_partner:
            labels[i] = 1
        else:
            labels[i] = 2
    return out


def pair_matrix(offsets, country_ids, system_map, n_system):
    cdef int64_t[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef int32_t[::1] ids = np.ascontiguousarray(country_ids, dtype=np.int32)
    cdef int32_t[::1] smap = np.ascontiguousarray(system_map, dtype=np.int32)
    cdef Py_ssize_t ns = n_system
    out = np.zeros((ns, ns), dtype=np.int64)
    cdef int64_t[:, ::1] counts = out
    member_buf = np.empty(ns, dtype=np.int32)
    cdef int32_t[::1] members = member_buf
    cdef Py_ssize_t i, j, a, b, k
    cdef int32_t sid, x, y
    for i in range(off.shape[0] - 1):
        k = 0
        for j in range(off[i], off[i + 1]):
            sid = smap[ids[j]]
            if sid >= 0:
                members[k] = sid
                k += 1
        for a in range(k):
            for b in range(a + 1, k):
                x = members[a]
                y = members[b]
                counts[x, y] += 1
                counts[y, x] += 1
    return out


def pair_matrix_by_year(offsets, country_ids, years, year_min, n_years, system_map, n_system):
    cdef int64_t[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef int32_t[::1] ids = np.ascontiguousarray(country_ids, dtype=np.int32)
    cdef int32_t[::1] yrs = np.ascontiguousarray(years, dtype=np.int32)
    cdef int32_t[::1] smap = np.ascontiguousarray(system_map, dtype=np.int32)
    cdef Py_ssize_t ns = n_system
    cdef Py_ssize_t ny = n_years
    cdef int32_t y0 = year_min
    out = np.zeros((ny, ns, ns), dtype=np.int64)
    cdef int64_t[:, :, ::1] counts = out
    member_buf = np.empty(ns, dtype=np.int32)
    cdef int32_t[::1] members = member_buf
    cdef Py_ssize_t i, j, a, b, k
    cdef int64_t t
    cdef int32_t sid, x, y
    for i in range(off.shape[0] - 1):
        t = yrs[i] - y0
        if t < 0 or t >= ny:
            continue
        k = 0
        for j in range(off[i], off[i + 1]):
            sid = smap[ids[j]]
            if sid >= 0:
                members[k] = sid
                k += 1
        for a in range(k):
            for b in range(a + 1, k):
                x = members[a]
                y = members[b]
                counts[t, x, y] += 1
                counts[t, y, x] += 1
    return out
