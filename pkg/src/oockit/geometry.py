"""Singer-cycle model of PG(k, q).

Points are the exponents 0 .. theta(k, q) - 1 of a primitive element beta of
GF(q^(k+1)); two exponents name the same projective point exactly when they
agree modulo n = theta(k, q).  The cyclic collineation phi maps exponent e to
e + 1, and the subgroup generated by phi^Lambda (for Lambda dividing n) drives
every orbit computation here.  Point sets are plain sorted tuples of ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .field import DEFAULT_TABLE_LIMIT, build_field, factor_prime_power


class GeometryError(ValueError):
    """Invalid geometry construction or query."""


@dataclass(frozen=True)
class Spread:
    """A partition of the points of PG(k, q) into theta(k)/theta(d) disjoint
    d-flats, each a coset of the stride-Lambda exponent progression."""

    d: int
    Lambda: int
    elements: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HOrbit:
    members: tuple[tuple[int, ...], ...]
    full: bool


class SingerGeometry:
    """PG(k, q) and its Singer shift, with line/flat/spread queries."""

    def __init__(self, q: int, k: int, *, table_limit: int = DEFAULT_TABLE_LIMIT):
        p, m = factor_prime_power(q)
        if k < 2:
            raise GeometryError(f"projective dimension {k} must be at least 2")
        self.q = q
        self.k = k
        self.field = build_field(p, m * (k + 1), table_limit=table_limit)
        self.n = (q ** (k + 1) - 1) // (q - 1)
        # Exponent multiples of n land in GF(q)*, so the subfield GF(q) inside
        # GF(q^(k+1)) is 0 together with the powers of beta^n.
        self.subfield_step = self.n
        f = self.field
        self.gfq = tuple(sorted({0} | {f.exp(self.n * j) for j in range(q - 1)}))
        if len(self.gfq) != q:
            raise GeometryError("subfield enumeration failed")
        self._lines: tuple[tuple[int, ...], ...] | None = None

    def __repr__(self):
        return f"SingerGeometry(q={self.q}, k={self.k}, n={self.n})"

    # -- points and lines ---------------------------------------------------

    def line_through(self, a: int, b: int) -> tuple[int, ...]:
        """The q+1 points of the unique line through two distinct points."""
        n = self.n
        a %= n
        b %= n
        if a == b:
            raise GeometryError(f"line_through needs distinct points, got {a} twice")
        f = self.field
        ea = f.exp(a)
        eb = f.exp(b)
        pts = {b}
        for c in self.gfq:
            pts.add(f.log(f.add(ea, f.mul(c, eb))) % n)
        if len(pts) != self.q + 1:
            raise GeometryError(f"degenerate line through {a}, {b}")
        return tuple(sorted(pts))

    def enumerate_lines(self) -> tuple[tuple[int, ...], ...]:
        """All distinct lines, canonicalized and sorted.

        Each unordered point pair is marked off once its line is known, so
        every line is constructed exactly once.
        """
        if self._lines is not None:
            return self._lines
        covered = set()
        lines = []
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if (a, b) in covered:
                    continue
                ln = self.line_through(a, b)
                lines.append(ln)
                for pair in combinations(ln, 2):
                    covered.add(pair)
        lines.sort()
        expected = self.theta(self.k) * self.theta(self.k - 1) // (self.q + 1)
        if len(lines) != expected:
            raise GeometryError(
                f"line enumeration found {len(lines)} lines, expected {expected}"
            )
        self._lines = tuple(lines)
        return self._lines

    def theta(self, d: int) -> int:
        """Point count of PG(d, q); 0 for the empty space d = -1."""
        q = self.q
        return (q ** (d + 1) - 1) // (q - 1) if d >= 0 else 0

    # -- spreads and orbits -------------------------------------------------

    def singer_spread(self, d: int) -> Spread:
        """The cyclic d-spread, available exactly when d+1 divides k+1.

        Element j is the arithmetic progression j, j+Lambda, ... of exponents;
        each element is verified to be a d-flat before the spread is returned.
        """
        if not 1 <= d < self.k:
            raise GeometryError(f"spread dimension {d} must satisfy 1 <= d < k")
        if (self.k + 1) % (d + 1):
            raise GeometryError(
                f"no cyclic {d}-spread in PG({self.k}, {self.q}): "
                f"{d + 1} does not divide {self.k + 1}"
            )
        T = self.theta(d)
        Lambda = self.n // T
        elements = tuple(
            tuple(sorted((j + Lambda * t) % self.n for t in range(T)))
            for j in range(Lambda)
        )
        for el in elements:
            self._check_flat(el, d)
        covered = sorted(p for el in elements for p in el)
        if covered != list(range(self.n)):
            raise GeometryError("spread elements do not partition the points")
        return Spread(d=d, Lambda=Lambda, elements=elements)

    def _check_flat(self, points: tuple[int, ...], d: int) -> None:
        if len(points) != self.theta(d):
            raise GeometryError(f"candidate {d}-flat has {len(points)} points")
        if d == 1:
            if set(self.line_through(points[0], points[1])) != set(points):
                raise GeometryError(f"candidate line {points} is not a line")
            return
        # A theta(d)-point set closed under joining lines is a d-flat.
        pset = set(points)
        for a, b in combinations(points, 2):
            if not set(self.line_through(a, b)) <= pset:
                raise GeometryError(f"candidate {d}-flat {points} is not line-closed")

    def h_orbit(self, points, Lambda: int) -> HOrbit:
        """Orbit of a point set under exponent shifts by Lambda."""
        if Lambda < 1 or self.n % Lambda:
            raise GeometryError(f"Lambda {Lambda} must divide the point count {self.n}")
        T = self.n // Lambda
        start = tuple(sorted(p % self.n for p in points))
        members = []
        cur = start
        while not members or cur != start:
            members.append(cur)
            cur = tuple(sorted((e + Lambda) % self.n for e in cur))
        return HOrbit(tuple(members), full=len(members) == T)

    def plane_through_line(self, ell, third: int) -> tuple[int, ...]:
        """The plane of PG(3, q) spanned by a line and an outside point."""
        if self.k != 3:
            raise GeometryError("plane_through_line is only defined in PG(3, q)")
        third %= self.n
        ell = tuple(sorted(p % self.n for p in ell))
        if third in ell:
            raise GeometryError(f"point {third} lies on the line {ell}")
        pts = set(ell)
        for p in ell:
            pts.update(self.line_through(third, p))
        q = self.q
        if len(pts) != q * q + q + 1:
            raise GeometryError(f"span of {ell} and {third} is not a plane")
        return tuple(sorted(pts))


@lru_cache(maxsize=None)
def build_geometry(q: int, k: int, table_limit: int = DEFAULT_TABLE_LIMIT) -> SingerGeometry:
    """Build (and cache) the Singer model of PG(k, q).

    Geometries are immutable after construction, so sharing a cached instance
    across callers is safe.
    """
    return SingerGeometry(q, k, table_limit=table_limit)


def incidence_array(points, Lambda: int, T: int) -> list[list[int]]:
    """Lambda x T binary array with a 1 at (i, j) iff point i + Lambda*j is in
    the set.  Row i collects the points of residue class i modulo Lambda."""
    n = Lambda * T
    arr = [[0] * T for _ in range(Lambda)]
    for e in points:
        if not 0 <= e < n:
            raise GeometryError(f"point {e} out of range for a {Lambda}x{T} array")
        arr[e % Lambda][e // Lambda] = 1
    return arr
