"""Named unit-distance graphs and the product constructions.

Everything here is built from exact primitives: rational rotations, exact
circle intersections, and lattice combinations. No coordinate is copied
from a drawing; each construction is validated structurally by the tests
(vertex and edge counts, chromatic numbers, degree profiles).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import VertexCollision
from .exactnum import QNum, sqrt_rational
from .geometry import (
    ORIGIN,
    EPoint,
    UnitVector,
    pyth_unit_vector,
    rotate,
    sq_dist,
    unit_circle_pair,
)
from .graph import UdGraph, from_points

HALF = Fraction(1, 2)
HALF_ROOT3 = sqrt_rational(Fraction(3, 4))  # (1/2) * sqrt(3)

# Rotation by 60 degrees; generates the hexagonal directions.
SIXTH_TURN = UnitVector(HALF, HALF_ROOT3)
# Rotation by 120 degrees.
THIRD_TURN = UnitVector(Fraction(-1, 2), HALF_ROOT3)


def unit_triangle() -> UdGraph:
    """Equilateral triangle with unit sides (the 3-cycle)."""
    return from_points(
        [ORIGIN, EPoint(1, 0), EPoint(HALF, HALF_ROOT3)]
    )


def moser_spindle() -> UdGraph:
    """Two unit rhombi sharing a vertex, tips pulled to distance 1.

    The rhombus is a pair of unit equilateral triangles glued along an
    edge; its copy is rotated about the shared vertex by the exact unit
    vector (5/6, sqrt(11)/6), which is precisely the angle that puts the
    two rhombus tips at distance 1 (both tips sit at squared distance 3
    from the shared vertex, and 3 + 3 - 2*3*(5/6) = 1).
    """
    a = ORIGIN
    b = EPoint(1, 0)
    c = EPoint(HALF, HALF_ROOT3)
    tip = EPoint(Fraction(3, 2), HALF_ROOT3)
    spin = UnitVector(Fraction(5, 6), sqrt_rational(Fraction(11, 36)))
    return from_points(
        [a, b, c, tip, rotate(b, spin), rotate(c, spin), rotate(tip, spin)]
    )


def golomb_graph() -> UdGraph:
    """Hexagonal wheel plus a concentric unit triangle tied to it.

    The wheel is the center with a unit hexagon built by chained unit
    circle intersections. The triangle has circumradius 1/sqrt(3) and is
    turned so that each of its vertices is at exact distance 1 from one of
    the alternating hexagon vertices; the first triangle vertex comes from
    scaling the exact direction (sqrt(3)/6, sqrt(33)/6), the second by a
    120 degree rotation, and the third as a circle intersection of the
    first two (picking the candidate at triangle circumradius).
    """
    center = ORIGIN
    hexagon = [EPoint(1, 0)]
    while len(hexagon) < 6:
        p, q = unit_circle_pair(center, hexagon[-1])
        nxt = p if len(hexagon) == 1 else (p if p != hexagon[-2] else q)
        hexagon.append(nxt)

    radius = sqrt_rational(Fraction(1, 3))
    lean = UnitVector(
        sqrt_rational(Fraction(3, 36)), sqrt_rational(Fraction(33, 36))
    )
    t0 = rotate(EPoint(radius, QNum(0)), lean)
    t1 = rotate(t0, THIRD_TURN)
    cand_a, cand_b = unit_circle_pair(t0, t1)
    rho2 = QNum(Fraction(1, 3))
    t2 = cand_a if sq_dist(cand_a, center) == rho2 else cand_b
    return from_points([center, *hexagon, t0, t1, t2])


def minkowski_sum(g: UdGraph, u: UnitVector) -> UdGraph:
    """Union of a geometric graph with its translate by a unit vector.

    Every vertex gains the unit edge to its translate, so the minimum
    degree grows by at least one; any coincidental unit pairs between the
    copies become edges too (the edge set is always forced by geometry).
    """
    if g.points is None:
        raise ValueError("minkowski_sum needs a geometric graph")
    step = u.as_point()
    shifted = [p + step for p in g.points]
    for i, p in enumerate(g.points):
        for j, q in enumerate(shifted):
            if p == q:
                raise VertexCollision(i, j)
    return from_points(list(g.points) + shifted)


def triangular_patch(radius: int) -> UdGraph:
    """Hexagonal patch of the unit triangular lattice.

    Points i*(1, 0) + j*(1/2, sqrt(3)/2) for |i| <= radius, |j| <= radius,
    |i + j| <= radius. Any interior vertex has six unit neighbors.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    points = []
    for i in range(-radius, radius + 1):
        for j in range(-radius, radius + 1):
            if abs(i + j) <= radius:
                points.append(
                    EPoint(QNum(i) + QNum(Fraction(j, 2)), HALF_ROOT3 * j)
                )
    return from_points(points)


def lattice_point(i: int, j: int) -> EPoint:
    """Point of the unit triangular lattice at integer coordinates (i, j)."""
    return EPoint(QNum(i) + QNum(Fraction(j, 2)), HALF_ROOT3 * j)


def double_minkowski_triangle() -> UdGraph:
    """(unit triangle + pyth(1/2)) + pyth(1/3): 12 vertices, min degree 4.

    Two successive translations of the triangle raise every degree to at
    least four, which is the workbench's counterexample to the idea that a
    finite unit-distance graph must contain a vertex of degree at most 3.
    """
    once = minkowski_sum(unit_triangle(), pyth_unit_vector(Fraction(1, 2)))
    return minkowski_sum(once, pyth_unit_vector(Fraction(1, 3)))


_BUILDERS: dict[str, Callable[[], UdGraph]] = {
    "c3": unit_triangle,
    "moser": moser_spindle,
    "golomb": golomb_graph,
    "c3_mink1": lambda: minkowski_sum(
        unit_triangle(), pyth_unit_vector(Fraction(1, 2))
    ),
    "c3_mink2": double_minkowski_triangle,
    "patch1": lambda: triangular_patch(1),
    "patch2": lambda: triangular_patch(2),
}


def names() -> list[str]:
    return sorted(_BUILDERS)


def build(name: str) -> UdGraph:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown catalog graph {name!r}; see catalog list") from None
    return builder()
