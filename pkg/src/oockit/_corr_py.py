"""Pure-Python correlation kernels.

Fallback used when the compiled extension is unavailable.  Both backends
share the same contract: pulses arrive as parallel arrays of flattened
spatial cell indices and time slots, words delimited by a starts/offsets
array, and witnesses are the first (lowest-index) attainers of each maximum.

Correlation profiles are accumulated as collision histograms over the time
difference (ta - tb) mod T, which costs O(w_a * w_b) per word pair instead
of O(N * T) for dense arrays.
"""

from __future__ import annotations


def corr_profile(spat_a, time_a, spat_b, time_b, T):
    """profile[t] = number of pulse collisions between word a and word b
    time-shifted by t."""
    prof = [0] * T
    for sa, ta in zip(spat_a, time_a):
        for sb, tb in zip(spat_b, time_b):
            if sa == sb:
                d = ta - tb
                if d < 0:
                    d += T
                prof[d] += 1
    return prof


def sweep_auto(spat, time, starts, T):
    """Max off-peak autocorrelation over all words and shifts 1..T-1.

    Returns (value, word_index, shift); indices are -1 when T == 1.
    """
    best = 0
    best_word = -1
    best_shift = -1
    prof = [0] * T
    nwords = len(starts) - 1
    for wi in range(nwords):
        lo = starts[wi]
        hi = starts[wi + 1]
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


def sweep_cross(spat, time, starts, T):
    """Max cross-correlation over all unordered word pairs and shifts 0..T-1.

    Returns (value, i, j, shift); indices are -1 when fewer than two words.
    """
    best = 0
    best_i = -1
    best_j = -1
    best_shift = -1
    prof = [0] * T
    nwords = len(starts) - 1
    for i in range(nwords):
        ilo = starts[i]
        ihi = starts[i + 1]
        for j in range(i + 1, nwords):
            jlo = starts[j]
            jhi = starts[j + 1]
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
