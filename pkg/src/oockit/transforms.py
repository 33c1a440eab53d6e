"""Shape-changing code transformations.

reshape re-expresses spatial coordinates in a new mixed radix over the same
flattened cell index, leaving time untouched: a capacity- and
correlation-preserving bijection.  fold_time factors T = T1*T2, turning each
codeword into T1 codewords on a (T1*Lambda_1 x ... x T2) shape and
multiplying capacity by T1; the folded code is revalidated against the
guaranteed parameter transfer lambda_a' <= lambda_a, lambda_c' <=
max(lambda_a, lambda_c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .bounds import johnson_nd
from .ooc import (
    Code,
    CodeShape,
    Codeword,
    CorrelationReport,
    canonical_time_shift,
    sort_words,
    spatial_flat,
    spatial_unflatten,
    time_shift,
    validate_code,
)


class TransformError(ValueError):
    """Invalid or failed code transformation."""


def reshape_word(cw: Codeword, new_shape: CodeShape) -> Codeword:
    pulses = []
    for p in cw.pulses:
        flat = spatial_flat(cw.shape, p[:-1])
        pulses.append((*spatial_unflatten(new_shape, flat), p[-1]))
    return Codeword(new_shape, tuple(pulses))


def reshape(code: Code, new_spatial_dims) -> Code:
    """Refactor the spatial dimensions; the time axis and every correlation
    value are untouched."""
    new_dims = tuple(int(d) for d in new_spatial_dims)
    if prod(new_dims) != prod(code.shape.space_dims):
        raise TransformError(
            f"cannot reshape spatial dims {code.shape.space_dims} to {new_dims}: "
            "cell counts differ"
        )
    new_shape = CodeShape(new_dims, code.shape.T)
    words = [reshape_word(cw, new_shape) for cw in code.words]
    return Code(new_shape, code.w, code.lambda_a, code.lambda_c, sort_words(words))


def fold_word(cw: Codeword, new_shape: CodeShape, t1: int) -> Codeword:
    """Fold time j = u + t1*v into row block u, new time v."""
    lam1 = cw.shape.space_dims[0] if cw.shape.space_dims else 1
    pulses = []
    for p in cw.pulses:
        u, v = p[-1] % t1, p[-1] // t1
        i1 = p[0] if cw.shape.space_dims else 0
        rest = p[1:-1] if cw.shape.space_dims else ()
        pulses.append((i1 + lam1 * u, *rest, v))
    return Codeword(new_shape, tuple(pulses))


def fold_time(code: Code, t1: int) -> Code:
    """Trade time length for the first spatial dimension.

    Each source word contributes the folds of its time shifts by 0..t1-1,
    orbit-canonicalized; colliding folds indicate a short time orbit in the
    source and abort the transform.  The result is revalidated: size t1*|C|,
    lambda_a' <= lambda_a and lambda_c' <= max(lambda_a, lambda_c) must hold.
    """
    T = code.shape.T
    if t1 < 1 or T % t1:
        raise TransformError(f"t1 = {t1} must divide the time length {T}")
    t2 = T // t1
    old_dims = code.shape.space_dims
    lam1 = old_dims[0] if old_dims else 1
    new_shape = CodeShape((t1 * lam1, *old_dims[1:]), t2)

    words = []
    origin: dict[tuple, tuple[int, int]] = {}
    for wi, cw in enumerate(code.words):
        for s in range(t1):
            word = canonical_time_shift(fold_word(time_shift(cw, s), new_shape, t1))
            key = word.pulses
            if key in origin:
                prev = origin[key]
                raise TransformError(
                    f"fold collision: word {wi} shift {s} duplicates word "
                    f"{prev[0]} shift {prev[1]} (short time orbit in the source)"
                )
            origin[key] = (wi, s)
            words.append(word)

    folded = Code(
        new_shape,
        code.w,
        code.lambda_a,
        max(code.lambda_a, code.lambda_c),
        sort_words(words),
    )
    assert folded.size == t1 * code.size
    report = validate_code(folded)
    if not report.passes:
        raise TransformError(
            "folded code violates the guaranteed parameters: measured "
            f"({report.max_offpeak_auto}, {report.max_cross}) vs claimed "
            f"({folded.lambda_a}, {folded.lambda_c})"
        )
    return folded


@dataclass(frozen=True)
class ReshapeTransfer:
    new_spatial_dims: tuple[int, ...]


@dataclass(frozen=True)
class FoldTransfer:
    t1: int


@dataclass(frozen=True)
class TransferReport:
    """Whether J-optimality is guaranteed to carry through a transform.

    A failed predicate means no guarantee, not a claim of non-optimality.
    """

    kind: str
    input_size: int
    input_bound: int
    input_j_optimal: bool
    predicate_lhs: Fraction | None
    predicate_rhs: Fraction | None
    predicate_holds: bool
    guaranteed: bool
    note: str


def optimality_transfer(code: Code, report: CorrelationReport, transform) -> TransferReport:
    """Evaluate the exact-rational transfer predicate for a transform.

    For reshape the bound depends only on (N, T) and the size is unchanged,
    so optimality always transfers.  For fold_time with factor t1 the
    guarantee needs f - J < 1/t1 on the nested bound (in particular any
    integral f qualifies).
    """
    if report is None or not report.passes:
        raise TransformError("optimality transfer requires a validated code")
    lam = max(code.lambda_a, code.lambda_c)
    nd = johnson_nd(code.shape, code.w, lam).nested
    input_opt = code.size == nd.J
    if isinstance(transform, ReshapeTransfer):
        new_dims = tuple(transform.new_spatial_dims)
        if prod(new_dims) != prod(code.shape.space_dims):
            raise TransformError("reshape transfer: cell counts differ")
        return TransferReport(
            kind="reshape",
            input_size=code.size,
            input_bound=nd.J,
            input_j_optimal=input_opt,
            predicate_lhs=None,
            predicate_rhs=None,
            predicate_holds=True,
            guaranteed=input_opt,
            note="bound depends only on (N, T); size unchanged"
            if input_opt
            else "no guarantee: input does not meet the bound",
        )
    if isinstance(transform, FoldTransfer):
        t1 = transform.t1
        if t1 < 1 or code.shape.T % t1:
            raise TransformError(f"fold transfer: t1 = {t1} must divide T")
        lhs = nd.f_exact - nd.J
        rhs = Fraction(1, t1)
        holds = lhs < rhs
        guaranteed = input_opt and holds
        if guaranteed:
            note = f"f - J = {lhs} < 1/{t1}: folded bound equals {t1} * J"
        elif not input_opt:
            note = "no guarantee: input does not meet the bound"
        else:
            note = f"no guarantee: f - J = {lhs} >= 1/{t1}"
        return TransferReport(
            kind="fold",
            input_size=code.size,
            input_bound=nd.J,
            input_j_optimal=input_opt,
            predicate_lhs=lhs,
            predicate_rhs=rhs,
            predicate_holds=holds,
            guaranteed=guaranteed,
            note=note,
        )
    raise TransformError(f"unknown transform descriptor {transform!r}")
