"""Geometric code constructions over cyclic spreads of PG(k, q).

Both constructions identify codewords with point sets of the geometry via
the Lambda x T incidence array: row i of the array is the spread element
containing point i, so a point set meeting every spread element at most once
yields an ideal codeword (zero off-peak autocorrelation).

Construction 1 (spread-line codes): codewords are the shift-orbit
representatives of all lines not contained in any element of a d-spread.
Construction 2 (conic-line codes, k = 3): adds, for each spread line ell, the
full conic family of a plane through ell, giving an asymptotically optimal
ideal code with cross-correlation at most 2.
"""

from __future__ import annotations

from .bounds import num_lines, theta
from .conics import build_chart, conic_family
from .field import DEFAULT_TABLE_LIMIT
from .geometry import build_geometry
from .ooc import Code, CodeShape, Codeword, canonical_time_shift, sort_words


class ConstructionError(RuntimeError):
    """A construction invariant failed; the output would be untrustworthy."""


def _word_from_points(shape: CodeShape, Lambda: int, points) -> Codeword:
    pulses = tuple((e % Lambda, e // Lambda) for e in points)
    return canonical_time_shift(Codeword(shape, pulses))


def construct_spread_line_code(q: int, k: int, d: int, *, table_limit: int = DEFAULT_TABLE_LIMIT) -> Code:
    """Ideal (theta(k)/theta(d) x theta(d), q+1, 0, 1) code from the lines
    not contained in any element of the cyclic d-spread of PG(k, q).

    Every such line meets each spread element at most once and has a full
    shift orbit; one canonical representative per orbit becomes a codeword.
    The output size is certified against two independent counts.
    """
    if d < 1 or d >= k:
        raise ConstructionError(f"need 1 <= d < k, got d={d}, k={k}")
    if (k + 1) % (d + 1):
        raise ConstructionError(f"d+1 = {d + 1} must properly divide k+1 = {k + 1}")
    geom = build_geometry(q, k, table_limit)
    spread = geom.singer_spread(d)
    Lambda = spread.Lambda
    T = geom.n // Lambda
    shape = CodeShape((Lambda,), T)

    orbit_sizes: dict[Codeword, int] = {}
    for line in geom.enumerate_lines():
        # a line inside a spread element has all points in one residue class
        if len({p % Lambda for p in line}) == 1:
            continue
        rep = _word_from_points(shape, Lambda, line)
        orbit_sizes[rep] = orbit_sizes.get(rep, 0) + 1
    for rep, size in orbit_sizes.items():
        if size != T:
            raise ConstructionError(
                f"non-spread line orbit {rep.pulses} has size {size}, expected {T}"
            )

    words = sort_words(orbit_sizes)
    for cw in words:
        rows = {p[0] for p in cw.pulses}
        if len(rows) != cw.weight:
            raise ConstructionError(f"word {cw.pulses} has two pulses in one row")

    expected = theta(k, q) * (theta(k - 1, q) - theta(d - 1, q))
    den = theta(d, q) * (q + 1)
    if expected % den:
        raise ConstructionError("size formula is not integral")
    expected //= den
    by_lines = num_lines(k, q) - Lambda * num_lines(d, q)
    if by_lines % T or by_lines // T != expected:
        raise ConstructionError("line-count size disagrees with the closed formula")
    if len(words) != expected:
        raise ConstructionError(f"built {len(words)} words, expected {expected}")
    return Code(shape, q + 1, 0, 1, words)


def construct_conic_line_code(q: int, *, max_q: int = 13, table_limit: int = DEFAULT_TABLE_LIMIT) -> Code:
    """Ideal (q^2+1 x q+1, q+1, 0, 2) code from conics and non-spread lines
    of PG(3, q).

    For each line ell of the line spread, the plane through ell and the least
    outside point is charted with ell at infinity and contributes a verified
    family of q^3 - q^2 conics; non-spread line orbits are added as in
    construct_spread_line_code.  Total size must equal
    q*(q^2+1)*(q^2-q+1).

    Family verification cost grows like q^6 per plane, hence the max_q guard.
    """
    if q > max_q:
        raise ConstructionError(
            f"q = {q} exceeds the supported limit {max_q} (raise max_q to override)"
        )
    geom = build_geometry(q, 3, table_limit)
    spread = geom.singer_spread(1)
    Lambda = q * q + 1
    T = q + 1
    shape = CodeShape((Lambda,), T)

    conic_words = []
    for ell in spread.elements:
        ell_set = set(ell)
        third = next(p for p in range(geom.n) if p not in ell_set)
        plane = geom.plane_through_line(ell, third)
        chart = build_chart(geom, plane, ell)
        family = conic_family(chart)
        for member in family.members:
            if len({p % Lambda for p in member}) != len(member):
                raise ConstructionError(f"conic {member} meets a spread line twice")
            conic_words.append(_word_from_points(shape, Lambda, member))
    expected_conics = Lambda * (q**3 - q**2)
    if len(conic_words) != expected_conics:
        raise ConstructionError(
            f"{len(conic_words)} conic words, expected {expected_conics}"
        )

    line_code = construct_spread_line_code(q, 3, 1, table_limit=table_limit)
    words = sort_words(conic_words + list(line_code.words))
    if len(set(words)) != len(words):
        raise ConstructionError("conic and line orbits are not disjoint")

    expected = q * (q * q + 1) * (q * q - q + 1)
    if len(words) != expected:
        raise ConstructionError(f"built {len(words)} words, expected {expected}")
    return Code(shape, q + 1, 0, 2, words)
