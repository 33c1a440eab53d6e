"""Codeword tensors, the correlation engine, and structural classification.

A codeword is a sparse n-dimensional binary array: a set of pulse coordinate
tuples (i1, ..., i_{n-1}, t) over a shape (Lambda_1, ..., Lambda_{n-1}, T).
Only the final (time) axis is ever shifted; correlation between two words at
shift t counts coincident pulses after cyclically shifting the second word's
time coordinates by t.

Canonical form: every stored word is the time shift of its orbit that
minimizes the sorted list of (flattened spatial cell, time) pairs.  The
flattened cell index is invariant under spatial reshaping, so canonicality
survives reshape transforms.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import NamedTuple

from . import kernels


class CodeError(ValueError):
    """Structural violation in a codeword or code."""


@dataclass(frozen=True)
class CodeShape:
    """Spatial dimensions plus the distinguished time length T (last axis).

    space_dims may be empty, giving a 1-dimensional (time-only) code.
    """

    space_dims: tuple[int, ...]
    T: int

    def __post_init__(self):
        object.__setattr__(self, "space_dims", tuple(int(d) for d in self.space_dims))
        if any(d < 1 for d in self.space_dims) or self.T < 1:
            raise CodeError(f"all dimensions must be positive, got {self}")

    @property
    def N(self) -> int:
        return prod(self.space_dims) * self.T

    @property
    def ndim(self) -> int:
        return len(self.space_dims) + 1

    @property
    def dims(self) -> tuple[int, ...]:
        return (*self.space_dims, self.T)


def spatial_flat(shape: CodeShape, coords) -> int:
    """Mixed-radix flattening of spatial coordinates, dimension 1 fastest:
    i1 + Lambda_1*i2 + Lambda_1*Lambda_2*i3 + ..."""
    flat = 0
    mult = 1
    for c, d in zip(coords, shape.space_dims):
        flat += c * mult
        mult *= d
    return flat


def spatial_unflatten(shape: CodeShape, flat: int) -> tuple[int, ...]:
    coords = []
    for d in shape.space_dims:
        coords.append(flat % d)
        flat //= d
    return tuple(coords)


@dataclass(frozen=True)
class Codeword:
    shape: CodeShape
    pulses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        pulses = tuple(sorted(tuple(int(c) for c in p) for p in self.pulses))
        object.__setattr__(self, "pulses", pulses)
        dims = self.shape.dims
        for p in pulses:
            if len(p) != len(dims):
                raise CodeError(f"pulse {p} has arity {len(p)}, expected {len(dims)}")
            for c, d in zip(p, dims):
                if not 0 <= c < d:
                    raise CodeError(f"pulse {p} out of range for shape {dims}")
        if len(set(pulses)) != len(pulses):
            raise CodeError("duplicate pulse in codeword")

    @property
    def weight(self) -> int:
        return len(self.pulses)

    def flat_pairs(self) -> list[tuple[int, int]]:
        """Pulses as (flattened spatial cell, time) pairs."""
        return [(spatial_flat(self.shape, p[:-1]), p[-1]) for p in self.pulses]


def time_shift(cw: Codeword, t: int) -> Codeword:
    T = cw.shape.T
    t %= T
    if t == 0:
        return cw
    return Codeword(cw.shape, tuple((*p[:-1], (p[-1] + t) % T) for p in cw.pulses))


def canonical_time_shift(cw: Codeword) -> Codeword:
    """The representative of cw's time-shift orbit with the least sorted
    (flat cell, time) pulse list."""
    T = cw.shape.T
    pairs = cw.flat_pairs()
    best_t = 0
    best_key = sorted(pairs)
    for t in range(1, T):
        key = sorted((s, (tt + t) % T) for s, tt in pairs)
        if key < best_key:
            best_key = key
            best_t = t
    return time_shift(cw, best_t)


@dataclass(frozen=True)
class Code:
    """A family of same-shape, same-weight codewords with claimed correlation
    parameters.  Heavyweight invariants are checked by validate_code."""

    shape: CodeShape
    w: int
    lambda_a: int
    lambda_c: int
    words: tuple[Codeword, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))

    @property
    def size(self) -> int:
        return len(self.words)


def sort_words(words) -> tuple[Codeword, ...]:
    return tuple(sorted(words, key=lambda cw: cw.pulses))


class CorrMax(NamedTuple):
    value: int
    shift: int | None
    in_orbit: bool = False


def cross_correlation(a: Codeword, b: Codeword, t: int) -> int:
    """Pulse collisions between a and b time-shifted by t."""
    if a.shape != b.shape:
        raise CodeError(f"shape mismatch: {a.shape} vs {b.shape}")
    T = a.shape.T
    shifted = {(*p[:-1], (p[-1] + t) % T) for p in b.pulses}
    return sum(p in shifted for p in a.pulses)


def _word_arrays(cw: Codeword) -> tuple[array, array]:
    pairs = cw.flat_pairs()
    return array("q", (s for s, _ in pairs)), array("q", (t for _, t in pairs))


def max_offpeak_auto(cw: Codeword) -> CorrMax:
    """Max collisions of a word with its own nonzero time shifts.

    Vacuously 0 when T == 1 (the shift range is empty).
    """
    T = cw.shape.T
    if T == 1 or not cw.pulses:
        return CorrMax(0, None)
    spat, times = _word_arrays(cw)
    prof = kernels.corr_profile(spat, times, spat, times, T)
    best = max(prof[1:])
    return CorrMax(best, prof.index(best, 1))


def max_cross(a: Codeword, b: Codeword) -> CorrMax:
    """Max collisions between two words over all time shifts.

    If the words are time shifts of one another the maximum equals the
    weight; the result is then flagged in_orbit.
    """
    if a.shape != b.shape:
        raise CodeError(f"shape mismatch: {a.shape} vs {b.shape}")
    if not a.pulses or not b.pulses:
        return CorrMax(0, None)
    T = a.shape.T
    sa, ta = _word_arrays(a)
    sb, tb = _word_arrays(b)
    prof = kernels.corr_profile(sa, ta, sb, tb, T)
    best = max(prof)
    return CorrMax(best, prof.index(best), in_orbit=best == a.weight == b.weight)


@dataclass(frozen=True)
class SectionFlags:
    amops: bool
    sps: bool


@dataclass(frozen=True)
class CorrelationReport:
    max_offpeak_auto: int
    max_cross: int
    auto_witness: tuple[int, int] | None  # (word index, shift)
    cross_witness: tuple[int, int, int] | None  # (word i, word j, shift)
    is_ideal: bool
    amops_flags: dict[tuple[int, ...], SectionFlags]
    passes: bool


def classify_sections(code: Code) -> dict[tuple[int, ...], SectionFlags]:
    """AMOPS/SPS status for every nonempty set of spatial dimension indices.

    A section fixes the coordinates named by the (1-based) index set J; the
    code is AMOPS(J) when no word has two pulses in one section, SPS(J) when
    every section of every word holds exactly one pulse.
    """
    dims = code.shape.space_dims
    flags: dict[tuple[int, ...], SectionFlags] = {}
    for r in range(1, len(dims) + 1):
        for J in combinations(range(1, len(dims) + 1), r):
            M = prod(dims[j - 1] for j in J)
            amops = True
            sps = True
            for cw in code.words:
                keys = [tuple(p[j - 1] for j in J) for p in cw.pulses]
                distinct = len(set(keys)) == len(keys)
                amops = amops and distinct
                sps = sps and distinct and len(keys) == M
            flags[J] = SectionFlags(amops, sps)
    return flags


def _pack(code: Code) -> tuple[array, array, array]:
    spat = array("q")
    times = array("q")
    starts = array("q", [0])
    for cw in code.words:
        for s, t in cw.flat_pairs():
            spat.append(s)
            times.append(t)
        starts.append(len(spat))
    return spat, times, starts


def validate_code(code: Code) -> CorrelationReport:
    """Full brute-force certification of a code.

    Checks structural invariants (shared shape, constant weight, no pair of
    words in the same time-shift orbit), then sweeps every word against its
    own shifts and every unordered word pair against all shifts.  The report
    passes iff both measured maxima are within the claimed (lambda_a,
    lambda_c).
    """
    if not code.words:
        raise CodeError("empty code")
    for i, cw in enumerate(code.words):
        if cw.shape != code.shape:
            raise CodeError(f"word {i}: shape {cw.shape} != code shape {code.shape}")
        if cw.weight != code.w:
            raise CodeError(f"word {i}: weight {cw.weight} != declared {code.w}")
    seen: dict[tuple, int] = {}
    for i, cw in enumerate(code.words):
        key = tuple(canonical_time_shift(cw).pulses)
        if key in seen:
            raise CodeError(
                f"words {seen[key]} and {i} are time shifts of one another"
            )
        seen[key] = i

    spat, times, starts = _pack(code)
    T = code.shape.T
    a_val, a_word, a_shift = kernels.sweep_auto(spat, times, starts, T)
    c_val, c_i, c_j, c_shift = kernels.sweep_cross(spat, times, starts, T)
    return CorrelationReport(
        max_offpeak_auto=a_val,
        max_cross=c_val,
        auto_witness=(a_word, a_shift) if a_word >= 0 else None,
        cross_witness=(c_i, c_j, c_shift) if c_i >= 0 else None,
        is_ideal=a_val == 0,
        amops_flags=classify_sections(code),
        passes=a_val <= code.lambda_a and c_val <= code.lambda_c,
    )
