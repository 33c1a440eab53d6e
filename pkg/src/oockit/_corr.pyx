# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled correlation kernels.

Same contract as the pure-Python backend in _corr_py: collision histograms
over the time difference, witnesses are the first attainers in scan order.
"""

from libc.stdlib cimport calloc, free


def corr_profile(const long long[::1] spat_a, const long long[::1] time_a,
                 const long long[::1] spat_b, const long long[::1] time_b,
                 Py_ssize_t T):
    cdef Py_ssize_t x, y
    cdef long long sx, tx, d
    cdef long long* prof = <long long*> calloc(T, sizeof(long long))
    if prof == NULL:
        raise MemoryError()
    try:
        for x in range(spat_a.shape[0]):
            sx = spat_a[x]
            tx = time_a[x]
            for y in range(spat_b.shape[0]):
                if spat_b[y] == sx:
                    d = tx - time_b[y]
                    if d < 0:
                        d += T
                    prof[d] += 1
        return [prof[t] for t in range(T)]
    finally:
        free(prof)


def sweep_auto(const long long[::1] spat, const long long[::1] time,
               const long long[::1] starts, Py_ssize_t T):
    cdef Py_ssize_t nwords = starts.shape[0] - 1
    cdef Py_ssize_t wi, x, y, lo, hi, t
    cdef long long sx, tx, d
    cdef long long best = 0
    cdef Py_ssize_t best_word = -1, best_shift = -1
    cdef long long* prof = <long long*> calloc(T, sizeof(long long))
    if prof == NULL:
        raise MemoryError()
    try:
        for wi in range(nwords):
            lo = <Py_ssize_t> starts[wi]
            hi = <Py_ssize_t> starts[wi + 1]
            for x in range(lo, hi):
                sx = spat[x]
                tx = time[x]
                for y in range(lo, hi):
                    if spat[y] == sx:
                        d = tx - time[y]
                        if d < 0:
                            d += T
                        prof[d] += 1
            for t in range(1, T):
                if prof[t] > best:
                    best = prof[t]
                    best_word = wi
                    best_shift = t
            for t in range(T):
                prof[t] = 0
        return best, best_word, best_shift
    finally:
        free(prof)


def sweep_cross(const long long[::1] spat, const long long[::1] time,
                const long long[::1] starts, Py_ssize_t T):
    cdef Py_ssize_t nwords = starts.shape[0] - 1
    cdef Py_ssize_t i, j, x, y, ilo, ihi, jlo, jhi, t
    cdef long long sx, tx, d
    cdef long long best = 0
    cdef Py_ssize_t best_i = -1, best_j = -1, best_shift = -1
    cdef long long* prof = <long long*> calloc(T, sizeof(long long))
    if prof == NULL:
        raise MemoryError()
    try:
        for i in range(nwords):
            ilo = <Py_ssize_t> starts[i]
            ihi = <Py_ssize_t> starts[i + 1]
            for j in range(i + 1, nwords):
                jlo = <Py_ssize_t> starts[j]
                jhi = <Py_ssize_t> starts[j + 1]
                for x in range(ilo, ihi):
                    sx = spat[x]
                    tx = time[x]
                    for y in range(jlo, jhi):
                        if spat[y] == sx:
                            d = tx - time[y]
                            if d < 0:
                                d += T
                            prof[d] += 1
                for t in range(T):
                    if prof[t] > best:
                        best = prof[t]
                        best_i = i
                        best_j = j
                        best_shift = t
                for t in range(T):
                    prof[t] = 0
        return best, best_i, best_j, best_shift
    finally:
        free(prof)
