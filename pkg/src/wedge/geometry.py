"""Exact planar kernel and the two tablet figures.

Frame: ``A`` is the origin, the square is axis-aligned and ``ABCD`` runs
counterclockwise, so every constructed point has rational coordinates and
surds only ever show up in lengths.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import (
    CoincidentLinesError,
    DegenerateLineError,
    DomainError,
    GeometryError,
    ParallelLinesError,
    VerificationError,
)
from .numeric import QuadValue, as_rational, format_rat


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __str__(self):
        return f"({format_rat(self.x)}, {format_rat(self.y)})"


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y = c``, scaled to coprime integers.

    The first nonzero coefficient of ``(a, b, c)`` is positive, so two
    descriptions of the same line compare equal.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        coeffs = [as_rational(v) for v in (self.a, self.b, self.c)]
        if coeffs[0] == 0 and coeffs[1] == 0:
            raise DegenerateLineError("line has a = b = 0")
        lcm = math.lcm(*(v.denominator for v in coeffs))
        ints = [int(v * lcm) for v in coeffs]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        for name, v in zip("abc", ints):
            object.__setattr__(self, name, Fraction(v))

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def __str__(self):
        return f"{format_rat(self.a)}x + {format_rat(self.b)}y = {format_rat(self.c)}"


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise DegenerateLineError(f"no unique line through coincident points {p}")
    a = q.y - p.y
    b = p.x - q.x
    return Line(a, b, a * p.x + b * p.y)


def perpendicular_through(p: Point, line: Line) -> Line:
    # the normal of the new line is the direction (b, -a) of the old one
    a, b = line.b, -line.a
    return Line(a, b, a * p.x + b * p.y)


def intersect(l1: Line, l2: Line) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        if l1 == l2:
            raise CoincidentLinesError(f"lines coincide: {l1}")
        raise ParallelLinesError(f"lines are parallel: {l1} and {l2}")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


def sq_dist(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def signed_area(vertices: Sequence[Point]) -> Fraction:
    """Shoelace sum halved; positive for counterclockwise vertex order."""
    if len(vertices) < 3:
        raise DomainError(f"a polygon needs at least 3 vertices, got {len(vertices)}")
    total = Fraction(0)
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total / 2


def polygon_area(vertices: Sequence[Point]) -> Fraction:
    """Absolute shoelace area; the polygon is assumed simple."""
    return abs(signed_area(vertices))


@dataclass(frozen=True)
class Figure:
    """Named points plus the segments and triangles drawn between them."""

    points: Mapping[str, Point]
    segments: tuple[tuple[str, str], ...] = ()
    triangles: tuple[tuple[str, tuple[str, str, str]], ...] = ()
    side: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "points", MappingProxyType(dict(self.points)))
        segs = tuple((p, q) for p, q in self.segments)
        tris = tuple((name, tuple(vs)) for name, vs in self.triangles)
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "triangles", tris)
        if self.side is not None:
            object.__setattr__(self, "side", as_rational(self.side))
        for p, q in segs:
            self._require(p)
            self._require(q)
        seen = set()
        for name, vs in tris:
            if name in seen:
                raise GeometryError(f"duplicate triangle name {name!r}")
            seen.add(name)
            if len(vs) != 3:
                raise GeometryError(f"triangle {name} needs 3 vertices")
            for v in vs:
                self._require(v)
            if signed_area([self.points[v] for v in vs]) == 0:
                raise GeometryError(f"triangle {name} {''.join(vs)} is degenerate")

    def _require(self, name):
        if name not in self.points:
            raise GeometryError(f"unknown point {name!r}")

    def __eq__(self, other):
        if not isinstance(other, Figure):
            return NotImplemented
        return (
            dict(self.points) == dict(other.points)
            and self.segments == other.segments
            and self.triangles == other.triangles
            and self.side == other.side
        )

    def __hash__(self):
        return hash((tuple(sorted(self.points.items())), self.segments, self.triangles, self.side))

    def triangle_points(self, name: str) -> list[Point]:
        for tname, vs in self.triangles:
            if tname == name:
                return [self.points[v] for v in vs]
        raise KeyError(name)

    def triangle_areas(self) -> list[tuple[str, Fraction]]:
        return [(name, polygon_area([self.points[v] for v in vs])) for name, vs in self.triangles]

    def to_dict(self) -> dict:
        return {
            "side": None if self.side is None else format_rat(self.side),
            "points": {
                name: {"x": format_rat(p.x), "y": format_rat(p.y)}
                for name, p in sorted(self.points.items())
            },
            "segments": [[p, q] for p, q in self.segments],
            "triangles": [
                {
                    "name": name,
                    "vertices": list(vs),
                    "area": format_rat(polygon_area([self.points[v] for v in vs])),
                }
                for name, vs in self.triangles
            ],
        }

    def to_json(self) -> str:
        """Figure JSON, one point/segment/triangle per line, points sorted by name."""
        d = self.to_dict()

        def block(items, open_, close):
            if not items:
                return open_ + close
            return open_ + "\n" + ",\n".join("    " + it for it in items) + "\n  " + close

        dump = json.dumps
        parts = [
            f'  "side": {dump(d["side"])}',
            '  "points": ' + block([f"{dump(k)}: {dump(v)}" for k, v in d["points"].items()], "{", "}"),
            '  "segments": ' + block([dump(s) for s in d["segments"]], "[", "]"),
            '  "triangles": ' + block([dump(t) for t in d["triangles"]], "[", "]"),
        ]
        return "{\n" + ",\n".join(parts) + "\n}\n"


def _positive_side(side) -> Fraction:
    side = as_rational(side)
    if side <= 0:
        raise DomainError(f"side must be positive, got {format_rat(side)}")
    return side


def _square_corners(side: Fraction) -> dict[str, Point]:
    return {
        "A": Point(0, 0),
        "B": Point(side, 0),
        "C": Point(side, side),
        "D": Point(0, side),
    }


# inner, ring, corner
BM15285_TRIANGLES = (
    ("O", "L", "M"), ("O", "M", "N"), ("O", "N", "R"), ("O", "R", "L"),
    ("L", "W", "M"), ("M", "X", "N"), ("N", "Y", "R"), ("R", "Z", "L"),
    ("A", "W", "L"), ("A", "L", "Z"), ("B", "X", "M"), ("B", "M", "W"),
    ("C", "Y", "N"), ("C", "N", "X"), ("D", "Z", "R"), ("D", "R", "Y"),
)

BM15285_SEGMENTS = (
    ("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"),
    ("A", "C"), ("B", "D"),
    ("W", "X"), ("X", "Y"), ("Y", "Z"), ("Z", "W"),
    ("L", "M"), ("M", "N"), ("N", "R"), ("R", "L"),
)


def build_bm15285_figure(side) -> Figure:
    """Execute the problem xii construction on a square of the given side.

    Each line through a midpoint is taken perpendicular to the diagonal
    that contains the midpoint (L and N against AC, M and R against BD);
    W, X, Y, Z are where consecutive such lines cross, which is always at
    the midpoints of the square's sides.
    """
    side = _positive_side(side)
    pts = _square_corners(side)
    ac = line_through(pts["A"], pts["C"])
    bd = line_through(pts["B"], pts["D"])
    pts["O"] = intersect(ac, bd)
    for name, corner in zip("LMNR", "ABCD"):
        pts[name] = midpoint(pts[corner], pts["O"])
    perp = {
        "L": perpendicular_through(pts["L"], ac),
        "M": perpendicular_through(pts["M"], bd),
        "N": perpendicular_through(pts["N"], ac),
        "R": perpendicular_through(pts["R"], bd),
    }
    for name, (u, v) in zip("WXYZ", (("L", "M"), ("M", "N"), ("N", "R"), ("R", "L"))):
        pts[name] = intersect(perp[u], perp[v])
    triangles = [(f"T{i}", vs) for i, vs in enumerate(BM15285_TRIANGLES, start=1)]
    return Figure(pts, BM15285_SEGMENTS, triangles, side)


def build_ybc7289_figure(side) -> Figure:
    """A square with both diagonals, split into four triangles at the centre."""
    side = _positive_side(side)
    pts = _square_corners(side)
    pts["O"] = intersect(line_through(pts["A"], pts["C"]), line_through(pts["B"], pts["D"]))
    segments = (("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("A", "C"), ("B", "D"))
    triangles = [
        ("T1", ("O", "A", "B")),
        ("T2", ("O", "B", "C")),
        ("T3", ("O", "C", "D")),
        ("T4", ("O", "D", "A")),
    ]
    return Figure(pts, segments, triangles, side)


@dataclass(frozen=True)
class VerificationReport:
    T: Fraction
    lm_sq: Fraction
    mn_sq: Fraction
    ln_sq: Fraction
    side: Fraction
    areas: tuple[tuple[str, Fraction], ...]
    identities: Mapping[str, bool] = field(default_factory=dict)

    @property
    def total_area(self) -> Fraction:
        return sum((a for _, a in self.areas), Fraction(0))

    @property
    def ok(self) -> bool:
        return all(self.identities.values())

    def rows(self) -> list[tuple[str, str, str]]:
        """(identity, left side, right side) with exact values as text."""
        T = self.T
        s2 = self.side * self.side
        return [
            ("all 16 areas equal", format_rat(T), format_rat(T)),
            ("(LM)^2 = 4T", format_rat(self.lm_sq), format_rat(4 * T)),
            ("(MN)^2 = 4T", format_rat(self.mn_sq), format_rat(4 * T)),
            ("(LN)^2 = 8T", format_rat(self.ln_sq), format_rat(8 * T)),
            ("(LM)^2 + (MN)^2 = (LN)^2", format_rat(self.lm_sq + self.mn_sq), format_rat(self.ln_sq)),
            ("sum of areas = side^2", format_rat(self.total_area), format_rat(s2)),
        ]


def _require_identity(identities, name, lhs, rhs):
    identities[name] = lhs == rhs
    if lhs != rhs:
        raise VerificationError(name, format_rat(lhs), format_rat(rhs))


def verify_problem_xii(fig: Figure) -> VerificationReport:
    """Check the wedge areas and the isosceles Pythagoras identities exactly.

    Raises VerificationError naming the first identity that fails.
    """
    if fig.side is None:
        raise DomainError("figure carries no side length")
    if len(fig.triangles) != 16:
        raise VerificationError("sixteen wedges", str(len(fig.triangles)), "16")
    p = fig.points
    identities: dict[str, bool] = {}
    for name, vs in fig.triangles:
        if signed_area([p[v] for v in vs]) <= 0:
            identities["positive orientation"] = False
            raise VerificationError(
                f"positive orientation of {name}",
                format_rat(signed_area([p[v] for v in vs])),
                "> 0",
            )
    identities["positive orientation"] = True
    areas = fig.triangle_areas()
    T = areas[0][1]
    for name, area in areas[1:]:
        if area != T:
            identities["equal areas"] = False
            raise VerificationError(f"equal areas ({areas[0][0]} vs {name})", format_rat(T), format_rat(area))
    identities["equal areas"] = True
    lm_sq = sq_dist(p["L"], p["M"])
    mn_sq = sq_dist(p["M"], p["N"])
    ln_sq = sq_dist(p["L"], p["N"])
    _require_identity(identities, "(LM)^2 = 4T", lm_sq, 4 * T)
    _require_identity(identities, "(MN)^2 = 4T", mn_sq, 4 * T)
    _require_identity(identities, "(LN)^2 = 8T", ln_sq, 8 * T)
    _require_identity(identities, "(LM)^2 + (MN)^2 = (LN)^2", lm_sq + mn_sq, ln_sq)
    total = sum((a for _, a in areas), Fraction(0))
    _require_identity(identities, "sum of areas = side^2", total, fig.side * fig.side)
    return VerificationReport(
        T=T,
        lm_sq=lm_sq,
        mn_sq=mn_sq,
        ln_sq=ln_sq,
        side=fig.side,
        areas=tuple(areas),
        identities=MappingProxyType(identities),
    )


@dataclass(frozen=True)
class DiagonalReport:
    side: Fraction
    diag_sq: Fraction

    @property
    def diagonal(self) -> QuadValue:
        """Exact diagonal length ``side * sqrt(2)``."""
        return QuadValue(0, self.side, 2)

    @property
    def ok(self) -> bool:
        return self.diag_sq == 2 * self.side * self.side


def ybc7289_report(fig: Figure) -> DiagonalReport:
    if fig.side is None:
        raise DomainError("figure carries no side length")
    diag_sq = sq_dist(fig.points["B"], fig.points["D"])
    if sq_dist(fig.points["A"], fig.points["C"]) != diag_sq:
        raise VerificationError("AC^2 = BD^2", format_rat(sq_dist(fig.points["A"], fig.points["C"])), format_rat(diag_sq))
    return DiagonalReport(fig.side, diag_sq)
