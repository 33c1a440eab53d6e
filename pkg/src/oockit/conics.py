"""Conic families in coordinatized planes of PG(3, q).

A plane through a distinguished line ell is charted by GF(q)^2: the chart
sends (x, y) to the projective point of beta^origin + x*beta^b1 + y*beta^b2,
where b1, b2 span ell and the origin is off ell.  The chart image is exactly
the q^2 points of the plane away from ell, so ell plays the line at infinity.

The conic family consists of every level set Q(P - v) = s of a single
anisotropic quadratic form Q, over all translations v in GF(q)^2 and all
levels s != 0.  That yields q^3 - q^2 conics of q+1 points each, pairwise
meeting in at most 2 points and all disjoint from ell; all three properties
are verified exhaustively rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .field import FieldTable, build_field, factor_prime_power
from .geometry import GeometryError, SingerGeometry


class ConicError(ValueError):
    """Conic family construction failure."""


def _eval_form(f: FieldTable, form: tuple[int, int, int], x: int, y: int) -> int:
    a, b, c = form
    return f.add(
        f.add(f.mul(a, f.mul(x, x)), f.mul(b, f.mul(x, y))),
        f.mul(c, f.mul(y, y)),
    )


def _anisotropic_form_over(f: FieldTable, elems) -> tuple[int, int, int]:
    """Least coefficient triple (a, b, c) such that a*x^2 + b*x*y + c*y^2
    vanishes only at the origin of elems^2, under lexicographic order of the
    element encodings."""
    elems = tuple(sorted(elems))
    nonzero = [(x, y) for x in elems for y in elems if x or y]
    for a in elems:
        for b in elems:
            for c in elems:
                if all(_eval_form(f, (a, b, c), x, y) for x, y in nonzero):
                    return (a, b, c)
    raise ConicError("no anisotropic binary quadratic form found")


def anisotropic_form(q: int) -> tuple[int, int, int]:
    """Least anisotropic binary quadratic form over GF(q), as coefficient
    encodings of that field's own table."""
    p, m = factor_prime_power(q)
    f = build_field(p, m)
    return _anisotropic_form_over(f, range(q))


@dataclass(frozen=True, eq=False)
class PlaneChart:
    """Affine coordinates on a plane of PG(3, q) with ell at infinity."""

    geom: SingerGeometry
    plane: tuple[int, ...]
    ell: tuple[int, ...]
    origin: int
    basis: tuple[int, int]
    grid: dict  # (x, y) in GF(q)^2 (subfield encodings) -> plane point

    def point(self, x: int, y: int) -> int:
        return self.grid[(x, y)]


@dataclass(frozen=True)
class ConicFamily:
    members: tuple[tuple[int, ...], ...]
    form: tuple[int, int, int]
    params: tuple[tuple[tuple[int, int], int], ...]  # ((v1, v2), s) per member


def build_chart(geom: SingerGeometry, plane, ell) -> PlaneChart:
    """Coordinatize a plane so that the line ell lies at infinity.

    Origin is the least plane point off ell; the basis is the two least
    points of ell.  The postconditions (q^2 distinct image points, disjoint
    from ell, together with ell covering the plane) are checked exhaustively.
    """
    plane = tuple(sorted(p % geom.n for p in plane))
    ell = tuple(sorted(p % geom.n for p in ell))
    plane_set = set(plane)
    ell_set = set(ell)
    if not ell_set <= plane_set:
        raise GeometryError(f"line {ell} is not contained in the plane")
    if set(geom.line_through(ell[0], ell[1])) != ell_set:
        raise GeometryError(f"{ell} is not a line")
    origin = min(plane_set - ell_set)
    b1, b2 = ell[0], ell[1]
    f = geom.field
    eo = f.exp(origin)
    e1 = f.exp(b1)
    e2 = f.exp(b2)
    grid = {}
    for x in geom.gfq:
        for y in geom.gfq:
            el = f.add(eo, f.add(f.mul(x, e1), f.mul(y, e2)))
            grid[(x, y)] = f.log(el) % geom.n
    image = set(grid.values())
    q = geom.q
    if len(image) != q * q or image & ell_set or image | ell_set != plane_set:
        raise GeometryError("chart postconditions failed")
    return PlaneChart(geom=geom, plane=plane, ell=ell, origin=origin, basis=(b1, b2), grid=grid)


def conic_family(chart: PlaneChart) -> ConicFamily:
    """All q^3 - q^2 translated level sets of one anisotropic form, mapped
    through the chart into the ambient space and fully verified."""
    geom = chart.geom
    f = geom.field
    q = geom.q
    elems = geom.gfq  # sorted, starts with 0
    form = _anisotropic_form_over(f, elems)

    members = []
    params = []
    for v1 in elems:
        for v2 in elems:
            levels: dict[int, list[int]] = {}
            for (x, y), pt in chart.grid.items():
                val = _eval_form(f, form, f.sub(x, v1), f.sub(y, v2))
                levels.setdefault(val, []).append(pt)
            for s in elems[1:]:
                member = tuple(sorted(levels.get(s, ())))
                if len(member) != q + 1:
                    raise ConicError(
                        f"level set of size {len(member)} for form {form}: expected {q + 1}"
                    )
                members.append(member)
                params.append(((v1, v2), s))

    if len(members) != q**3 - q**2:
        raise ConicError(f"family has {len(members)} members, expected {q**3 - q**2}")
    ell_set = set(chart.ell)
    for member in members:
        if ell_set & set(member):
            raise ConicError("conic meets the distinguished line")
    for m1, m2 in combinations(members, 2):
        if len(set(m1) & set(m2)) > 2:
            raise ConicError(f"conics {m1} and {m2} share more than 2 points")
    return ConicFamily(tuple(members), form, tuple(params))
