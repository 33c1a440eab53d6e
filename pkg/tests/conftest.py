"""Shared test helpers: dense-tensor correlation oracles and random codes.

The oracles here deliberately avoid the package's sparse correlation engine:
codewords are materialized as dense binary arrays and correlations computed
by rolling, multiplying, and summing (or by matrix products over the dense
stack), so engine results can be checked against an independent route.
"""

from __future__ import annotations

import random

import numpy as np

from oockit import Code, CodeShape, Codeword, canonical_time_shift


def dense_tensor(cw: Codeword) -> np.ndarray:
    arr = np.zeros(cw.shape.dims, dtype=np.int64)
    for p in cw.pulses:
        arr[p] = 1
    return arr


def oracle_profile(a: Codeword, b: Codeword) -> list[int]:
    """profile[t] = sum over all cells of a * (b time-shifted by t)."""
    A = dense_tensor(a)
    B = dense_tensor(b)
    return [int(np.sum(A * np.roll(B, t, axis=-1))) for t in range(a.shape.T)]


def dense_stack(code: Code) -> np.ndarray:
    """All words as dense arrays, shape (M, cells, T)."""
    cells = code.shape.N // code.shape.T
    out = np.zeros((len(code.words), cells, code.shape.T), dtype=np.float32)
    for i, cw in enumerate(code.words):
        for s, t in cw.flat_pairs():
            out[i, s, t] = 1.0
    return out


def oracle_sweep(code: Code) -> tuple[int, int]:
    """(max off-peak auto, max cross) via dense matrix products.

    For each shift t, S = W_t @ W.T gives every pairwise correlation at once;
    the diagonal holds autocorrelations, the off-diagonal cross-correlations.
    float32 accumulation is exact here (counts never exceed the weight).
    """
    W = dense_stack(code)
    M = W.shape[0]
    flat = W.reshape(M, -1)
    max_auto = 0
    max_cross = 0
    for t in range(code.shape.T):
        shifted = np.roll(W, t, axis=-1).reshape(M, -1)
        S = shifted @ flat.T
        if t:
            max_auto = max(max_auto, int(S.diagonal().max()))
        off = S - np.diag(S.diagonal())
        if M > 1:
            max_cross = max(max_cross, int(off.max()))
    return max_auto, max_cross


def random_code(rng: random.Random, max_cells: int = 10_000) -> Code:
    """A random small code with canonical, pairwise orbit-distinct words."""
    while True:
        n_spatial = rng.randint(0, 2)
        dims = tuple(rng.randint(1, 12) for _ in range(n_spatial))
        T = rng.randint(1, 24)
        shape = CodeShape(dims, T)
        if shape.N <= max_cells:
            break
    w = rng.randint(1, min(8, shape.N))
    n_words = rng.randint(1, 5)
    words = {}
    attempts = 0
    while len(words) < n_words and attempts < 50:
        attempts += 1
        pulses = set()
        while len(pulses) < w:
            pulses.add(tuple(rng.randrange(d) for d in shape.dims))
        cw = canonical_time_shift(Codeword(shape, tuple(pulses)))
        words[cw.pulses] = cw
    ws = sorted(words.values(), key=lambda c: c.pulses)
    return Code(shape, w, w, w, tuple(ws))
