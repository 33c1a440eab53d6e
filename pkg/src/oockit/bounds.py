"""Johnson-type capacity bounds in exact integer/rational arithmetic.

No floating point anywhere: nested floors are evaluated over Fraction, and
every bound carries both the exact rational value inside its outermost floor
(f_exact) and the integer floor (J).  When several branches of a bound apply
the returned result is the tightest one, with all evaluated branches
attached; branches[0] is always the nested-floor branch, which is the one
the bound-relationship predicates are defined over.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from math import floor, prod

from .ooc import Code, CodeShape, CorrelationReport


class BoundError(ValueError):
    """Invalid bound query."""


def theta(k: int, q: int) -> int:
    """Number of points of PG(k, q); 0 for k = -1 (the empty space)."""
    if q < 2:
        raise BoundError(f"order q = {q} must be at least 2")
    if k < -1:
        raise BoundError(f"dimension k = {k} must be at least -1")
    return (q ** (k + 1) - 1) // (q - 1)


def gaussian(a: int, b: int, q: int) -> int:
    """Gaussian binomial coefficient: the number of b-dimensional subspaces
    of an a-dimensional vector space over GF(q)."""
    if not 0 <= b <= a:
        raise BoundError(f"need 0 <= b <= a, got a={a}, b={b}")
    if q < 2:
        raise BoundError(f"order q = {q} must be at least 2")
    num = prod(q**a - q**i for i in range(b))
    den = prod(q**b - q**i for i in range(b))
    assert num % den == 0
    return num // den


def num_lines(k: int, q: int) -> int:
    """Number of lines of PG(k, q)."""
    return gaussian(k + 1, 2, q)


@dataclass(frozen=True)
class BoundResult:
    f_exact: Fraction
    J: int
    branch: str
    applicable: bool = True
    branches: tuple["BoundResult", ...] = ()

    def __post_init__(self):
        assert self.J == floor(self.f_exact)
        assert self.J >= 0

    @property
    def nested(self) -> "BoundResult":
        """The nested-floor branch of this bound."""
        return self.branches[0] if self.branches else self


def _nested_floor(terms: list[Fraction]) -> tuple[Fraction, int]:
    """Evaluate floor(t0 * floor(t1 * ... floor(tk))) from the inside out;
    returns the exact rational under the outermost floor plus its floor."""
    inner = 1
    for t in reversed(terms[1:]):
        inner = floor(t * inner)
    f = terms[0] * inner
    return f, floor(f)


def _pick(branches: list[BoundResult]) -> BoundResult:
    best = min(branches, key=lambda r: r.J)
    return replace(best, branches=tuple(branches))


def _check_wl(w: int, lam: int) -> None:
    if not w > lam >= 0:
        raise BoundError(f"need w > lambda >= 0, got w={w}, lambda={lam}")


def johnson_nonbinary(N: int, w: int, lam: int, m: int) -> BoundResult:
    """Johnson bound for constant-weight codes of length N over an alphabet
    of m+1 symbols (zero included), with Hamming correlation at most lam.

    A second branch applies when w^2 > m*N*lam:
    min(m*N, floor(m*N*(w - lam) / (w^2 - m*N*lam))).
    """
    _check_wl(w, lam)
    if m < 1:
        raise BoundError(f"alphabet parameter m = {m} must be at least 1")
    if not 1 <= w <= N:
        raise BoundError(f"need 1 <= w <= N, got w={w}, N={N}")
    terms = [Fraction(m * (N - i), w - i) for i in range(lam + 1)]
    f, J = _nested_floor(terms)
    branches = [BoundResult(f, J, "nonbinary-nested")]
    if w * w > m * N * lam:
        f2 = min(Fraction(m * N), Fraction(m * N * (w - lam), w * w - m * N * lam))
        branches.append(BoundResult(f2, floor(f2), "nonbinary-quadratic"))
    return _pick(branches)


def johnson_nd(shape: CodeShape, w: int, lam: int) -> BoundResult:
    """Johnson bound on codes of the given shape: max orbit representatives
    for weight w and correlation at most lam.

    Depends on the shape only through N and T, so any spatial refactoring of
    N/T yields the same bound.  A second branch applies when w^2 > N*lam.
    """
    _check_wl(w, lam)
    N, T = shape.N, shape.T
    if w > N:
        raise BoundError(f"weight {w} exceeds array size {N}")
    terms = [Fraction(N, T * w)]
    terms += [Fraction(N - i, w - i) for i in range(1, lam + 1)]
    f, J = _nested_floor(terms)
    branches = [BoundResult(f, J, "nd-nested")]
    if w * w > N * lam:
        f2 = min(Fraction(N, T), Fraction(N * (w - lam), T * (w * w - N * lam)))
        branches.append(BoundResult(f2, floor(f2), "nd-quadratic"))
    return _pick(branches)


def johnson_1d(N: int, w: int, lam: int) -> BoundResult:
    """The 1-dimensional (time-only) case of johnson_nd."""
    return johnson_nd(CodeShape((), N), w, lam)


def johnson_ideal(shape: CodeShape, w: int, lam_c: int) -> BoundResult:
    """Johnson bound for ideal codes (zero off-peak autocorrelation).

    An ideal code puts at most one pulse per spatial cell, so w may not
    exceed N/T.  At the extreme w = N/T the bound collapses to T^lam_c,
    which is asserted against the general nested formula.
    """
    _check_wl(w, lam_c)
    N, T = shape.N, shape.T
    cells = N // T
    if w > cells:
        raise BoundError(
            f"ideal code impossible: weight {w} exceeds the {cells} spatial cells"
        )
    terms = [Fraction(N, T * w)]
    terms += [Fraction(N - i * T, w - i) for i in range(1, lam_c + 1)]
    f, J = _nested_floor(terms)
    branches = [BoundResult(f, J, "ideal-nested")]
    if w == cells:
        extremal = T**lam_c
        assert J == extremal
        branches.append(BoundResult(Fraction(extremal), extremal, "ideal-extremal"))
    return _pick(branches)


def johnson_amops(shape: CodeShape, w: int, lam: int, section_dims) -> BoundResult:
    """Johnson bound for ideal codes with at most one pulse per section.

    section_dims lists the spatial dimension sizes whose product M counts the
    sections; the code must satisfy w <= M.  Extremal case w = M collapses to
    N^(lam+1) / (T * M^(lam+1)); both are asserted against the nested value,
    as is the containment under the plain ideal bound.
    """
    _check_wl(w, lam)
    section_dims = tuple(int(d) for d in section_dims)
    if not section_dims:
        raise BoundError("section_dims must name at least one spatial dimension")
    counts = Counter(section_dims)
    avail = Counter(shape.space_dims)
    if any(counts[d] > avail[d] for d in counts):
        raise BoundError(
            f"section dims {section_dims} are not among spatial dims {shape.space_dims}"
        )
    M = prod(section_dims)
    if M < w:
        raise BoundError(f"AMOPS impossible: weight {w} exceeds the {M} sections")
    N, T = shape.N, shape.T
    terms = [Fraction(N, T * w)]
    terms += [Fraction(N * (M - i), M * (w - i)) for i in range(1, lam + 1)]
    f, J = _nested_floor(terms)
    branches = [BoundResult(f, J, "amops-nested")]
    if w == M:
        extremal = Fraction(N ** (lam + 1), T * M ** (lam + 1))
        assert extremal.denominator == 1 and int(extremal) == J
        branches.append(BoundResult(extremal, int(extremal), "amops-extremal"))
        if len(section_dims) == 1:
            rest = list(shape.space_dims)
            rest.remove(section_dims[0])
            alt = T**lam * prod(d ** (lam + 1) for d in rest)
            assert alt == J
    assert J <= johnson_ideal(shape, w, lam).nested.J
    return _pick(branches)


@dataclass(frozen=True)
class BoundChainReport:
    """The sandwich (N/T)*J(N,w,lam) <= J(nd) <= (N/T)*J(N,w,lam) + N/T - 1,
    with the exact-rational tightness predicate that forces the left
    equality, and (optionally) the time-factoring variant for T = t1*T'."""

    J_1d: int
    f_1d: Fraction
    J_nd: int
    f_nd: Fraction
    chain: tuple[int, int, int]
    tight_predicate: bool  # f_1d - J_1d < T/N
    tight_equality: bool  # chain lower == middle
    factor_predicate: bool | None = None  # f_nd - J_nd < 1/t1
    factor_equality: bool | None = None  # t1 * J_nd == J_nd'(T/t1)


def bound_relationships(N: int, T: int, w: int, lam: int, t1: int | None = None) -> BoundChainReport:
    if T < 1 or N % T:
        raise BoundError(f"T = {T} must divide N = {N}")
    r1 = johnson_1d(N, w, lam).nested
    rnd = johnson_nd(CodeShape((N // T,), T), w, lam).nested
    lo = (N // T) * r1.J
    hi = lo + N // T - 1
    assert lo <= rnd.J <= hi
    tight = r1.f_exact - r1.J < Fraction(T, N)
    if tight:
        assert lo == rnd.J
    factor_predicate = factor_equality = None
    if t1 is not None:
        if t1 < 1 or T % t1:
            raise BoundError(f"t1 = {t1} must divide T = {T}")
        t2 = T // t1
        rnd2 = johnson_nd(CodeShape((N // t2,), t2), w, lam).nested
        factor_predicate = rnd.f_exact - rnd.J < Fraction(1, t1)
        factor_equality = t1 * rnd.J == rnd2.J
        if factor_predicate:
            assert factor_equality
    return BoundChainReport(
        J_1d=r1.J,
        f_1d=r1.f_exact,
        J_nd=rnd.J,
        f_nd=rnd.f_exact,
        chain=(lo, rnd.J, hi),
        tight_predicate=tight,
        tight_equality=lo == rnd.J,
        factor_predicate=factor_predicate,
        factor_equality=factor_equality,
    )


@dataclass(frozen=True)
class OptimalityReport:
    size: int
    bound: BoundResult
    bound_kind: str
    j_optimal: bool
    ratio: Fraction  # size / J, exact, for asymptotic-family tracking
    violation: bool  # size > J would contradict the bound


def optimality_report(
    code: Code,
    report: CorrelationReport,
    bound_kind: str = "ideal",
    section_indices: tuple[int, ...] | None = None,
) -> OptimalityReport:
    """Compare a validated code's size against one of its Johnson bounds.

    bound_kind is one of "nd", "ideal", "amops"; for "amops" pass the 1-based
    spatial dimension indices of the sections.  The code's claimed correlation
    parameters select the bound's lambda.
    """
    if report is None or not report.passes:
        raise BoundError("optimality report requires a code that passed validation")
    if bound_kind == "nd":
        b = johnson_nd(code.shape, code.w, max(code.lambda_a, code.lambda_c))
    elif bound_kind == "ideal":
        if report.max_offpeak_auto != 0:
            raise BoundError("ideal bound requires measured off-peak autocorrelation 0")
        b = johnson_ideal(code.shape, code.w, code.lambda_c)
    elif bound_kind == "amops":
        if not section_indices:
            raise BoundError("amops bound requires section indices")
        J = tuple(sorted(section_indices))
        flags = report.amops_flags.get(J)
        if flags is None or not flags.amops:
            raise BoundError(f"code is not AMOPS{J}")
        dims = tuple(code.shape.space_dims[j - 1] for j in J)
        b = johnson_amops(code.shape, code.w, code.lambda_c, dims)
    else:
        raise BoundError(f"unknown bound kind {bound_kind!r}")
    size = code.size
    return OptimalityReport(
        size=size,
        bound=b,
        bound_kind=bound_kind,
        j_optimal=size == b.J,
        ratio=Fraction(size, b.J),
        violation=size > b.J,
    )
