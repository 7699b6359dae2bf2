# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Minimum nonzero weight of an F_q-linear code by p-ary Gray-code walk.

Each step of the modular Gray code adds exactly one generator row (over
F_p) to the running codeword, so the weight is maintained incrementally.
"""

import numpy as np


def min_weight(rows, int p, int e, long long stop_at=1):
    cdef long long[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef Py_ssize_t k = R.shape[0]
    cdef Py_ssize_t nd = R.shape[1]
    if k == 0 or nd == 0:
        return -1
    cdef Py_ssize_t i, j, pos, s
    # sparse support of each row
    cdef long long[::1] start = np.zeros(k + 1, dtype=np.int64)
    nz_idx = []
    nz_val = []
    for i in range(k):
        row = np.asarray(R[i])
        idx = np.nonzero(row)[0]
        nz_idx.append(idx)
        nz_val.append(row[idx])
        start[i + 1] = start[i] + idx.size
    cdef long long[::1] sup = np.concatenate(nz_idx).astype(np.int64) if start[k] else np.zeros(1, dtype=np.int64)
    cdef long long[::1] val = np.concatenate(nz_val).astype(np.int64) if start[k] else np.zeros(1, dtype=np.int64)
    cdef long long[::1] cw = np.zeros(nd, dtype=np.int64)
    cdef long long[::1] symnz = np.zeros(nd // e + 1, dtype=np.int64)
    cdef long long[::1] counter = np.zeros(k + 1, dtype=np.int64)
    cdef long long weight = 0
    cdef long long best = -1
    cdef long long old, new
    cdef long long t, total = 1
    for i in range(k):
        total *= p
    for t in range(1, total):
        j = 0
        while counter[j] == p - 1:
            counter[j] = 0
            j += 1
        counter[j] += 1
        for pos in range(start[j], start[j + 1]):
            i = sup[pos]
            old = cw[i]
            new = old + val[pos]
            if new >= p:
                new -= p
            cw[i] = new
            if (old == 0) != (new == 0):
                s = i // e
                if new == 0:
                    symnz[s] -= 1
                    if symnz[s] == 0:
                        weight -= 1
                else:
                    symnz[s] += 1
                    if symnz[s] == 1:
                        weight += 1
        if weight > 0 and (best < 0 or weight < best):
            best = weight
            if best <= stop_at:
                break
    return best
