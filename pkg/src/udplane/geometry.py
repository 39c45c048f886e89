"""Exact planar points, squared distances, rotations, and the
intersection of two unit circles.

All coordinates are QNum values, so "is this distance exactly 1" is a
structural equality test. The circle intersection is restricted to center
pairs whose squared distance is rational; that keeps every output inside
the multi-quadratic field model (no nested radicals) and covers every
construction in the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CoincidentCenters, UnsupportedRadicand
from .exactnum import QNum, sqrt_rational

_Coord = QNum | Fraction | int


def _q(value: _Coord) -> QNum:
    return value if isinstance(value, QNum) else QNum(value)


@dataclass(frozen=True)
class EPoint:
    """Exact point of the plane; doubles as a displacement vector."""

    x: QNum
    y: QNum

    def __init__(self, x: _Coord, y: _Coord):
        object.__setattr__(self, "x", _q(x))
        object.__setattr__(self, "y", _q(y))

    def __add__(self, other: EPoint) -> EPoint:
        return EPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: EPoint) -> EPoint:
        return EPoint(self.x - other.x, self.y - other.y)

    def scaled(self, factor: _Coord) -> EPoint:
        f = _q(factor)
        return EPoint(self.x * f, self.y * f)

    def __str__(self) -> str:
        return f"({self.x}; {self.y})"

    @classmethod
    def parse(cls, text: str) -> EPoint:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad point text {text!r}")
        parts = body[1:-1].split(";")
        if len(parts) != 2:
            raise ValueError(f"bad point text {text!r}")
        return cls(QNum.parse(parts[0]), QNum.parse(parts[1]))


ORIGIN = EPoint(0, 0)


@dataclass(frozen=True)
class UnitVector:
    """Exact direction on the unit circle; ux^2 + uy^2 must equal 1."""

    ux: QNum
    uy: QNum

    def __init__(self, ux: _Coord, uy: _Coord):
        ux, uy = _q(ux), _q(uy)
        if ux * ux + uy * uy != QNum(1):
            raise ValueError(f"({ux}; {uy}) is not on the unit circle")
        object.__setattr__(self, "ux", ux)
        object.__setattr__(self, "uy", uy)

    def as_point(self) -> EPoint:
        return EPoint(self.ux, self.uy)


def sq_dist(p: EPoint, q: EPoint) -> QNum:
    """Exact squared Euclidean distance."""
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def is_unit(p: EPoint, q: EPoint) -> bool:
    """True iff p and q are at distance exactly 1."""
    return sq_dist(p, q) == QNum(1)


def pyth_unit_vector(t: Fraction | int) -> UnitVector:
    """Rational point on the unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2))."""
    t = Fraction(t)
    den = 1 + t * t
    return UnitVector((1 - t * t) / den, (2 * t) / den)


def rotate(p: EPoint, u: UnitVector) -> EPoint:
    """Rotate p about the origin by the angle of u (complex multiplication)."""
    return EPoint(p.x * u.ux - p.y * u.uy, p.x * u.uy + p.y * u.ux)


def unit_circle_pair(a: EPoint, b: EPoint) -> tuple[EPoint, EPoint]:
    """The two points at exact distance 1 from both a and b.

    Writing d^2 for the squared center distance, the points are

        midpoint(a, b) +- sqrt((1 - d^2/4) / d^2) * perp(b - a)

    where perp is the +90 degree rotation; the scale factor has exactly the
    length needed to land on both circles. The first returned point lies on
    the +90 side. The two points coincide exactly when d^2 = 4 (tangency).

    Raises CoincidentCenters when a = b, UnsupportedRadicand when d^2 is
    irrational (the offset would need a nested radical), and ValueError when
    d^2 > 4 (the circles do not meet).
    """
    diff = b - a
    d2 = diff.x * diff.x + diff.y * diff.y
    if not d2:
        raise CoincidentCenters(f"both centers equal {a}")
    if not d2.is_rational():
        raise UnsupportedRadicand(
            f"squared center distance {d2} is irrational; "
            "intersection leaves the supported field"
        )
    dd = d2.as_rational()
    if dd > 4:
        raise ValueError(f"squared center distance {dd} exceeds 4; circles disjoint")
    scale = sqrt_rational((1 - dd / 4) / dd)
    mid = (a + b).scaled(Fraction(1, 2))
    offset = EPoint(-diff.y, diff.x).scaled(scale)
    return mid + offset, mid - offset
