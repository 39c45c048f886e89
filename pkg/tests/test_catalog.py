"""Named constructions: structure counts frozen from exact recomputation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from udplane.catalog import (
    build,
    lattice_point,
    minkowski_sum,
    moser_spindle,
    names,
    triangular_patch,
    unit_triangle,
)
from udplane.errors import VertexCollision
from udplane.exactnum import sqrt_rational
from udplane.geometry import is_unit, pyth_unit_vector, sq_dist
from udplane.graph import UdGraph, degeneracy, max_clique

# (n, m, min_degree, degeneracy), each recomputed from the exact edge set
EXPECTED = {
    "c3": (3, 3, 2, 2),
    "c3_mink1": (6, 9, 3, 3),
    "c3_mink2": (12, 24, 4, 4),
    "golomb": (10, 18, 3, 3),
    "moser": (7, 11, 3, 3),
    "patch1": (7, 12, 3, 3),
    "patch2": (19, 42, 3, 3),
}


def test_catalog_names_match_expected():
    assert names() == sorted(EXPECTED)


def test_catalog_structure_counts():
    for name, (n, m, dmin, degen) in EXPECTED.items():
        g = build(name)
        assert (g.n, g.m) == (n, m), name
        assert g.min_degree() == dmin, name
        assert degeneracy(g).degeneracy == degen, name
        assert g.is_geometric(), name


def test_build_unknown_name():
    with pytest.raises(KeyError):
        build("petersen")


def test_unit_triangle_is_equilateral():
    g = unit_triangle()
    pts = g.points
    assert all(
        is_unit(pts[i], pts[j]) for i in range(3) for j in range(i + 1, 3)
    )


def test_moser_spindle_structure():
    g = moser_spindle()
    degrees = sorted(g.degree(v) for v in range(7))
    # the shared vertex has degree 4, the two tips have degree 3 each and
    # are adjacent, everything else sits in two rhombi
    assert degrees == [3, 3, 3, 3, 3, 3, 4]
    assert max_clique(g) == 3


def test_golomb_structure():
    g = build("golomb")
    # center 0, hexagon 1..6, triangle 7..9
    assert g.degree(0) == 6
    assert all(g.degree(v) == 3 for v in range(7, 10))
    assert g.has_edge(7, 8) and g.has_edge(8, 9) and g.has_edge(7, 9)
    # triangle sits at circumradius sqrt(1/3) around the center
    for v in range(7, 10):
        assert sq_dist(g.points[0], g.points[v]) == Fraction(1, 3)
    # each triangle vertex reaches exactly one hexagon vertex, and those
    # three hexagon vertices alternate around the ring
    reached = set()
    for v in range(7, 10):
        hex_neighbors = [u for u in g.neighbors(v) if 1 <= u <= 6]
        assert len(hex_neighbors) == 1
        reached.add(hex_neighbors[0])
    assert reached in ({1, 3, 5}, {2, 4, 6})


def test_minkowski_raises_degree_by_one():
    for name in ("c3", "moser", "patch1"):
        g = build(name)
        summed = minkowski_sum(g, pyth_unit_vector(Fraction(2, 5)))
        assert summed.n == 2 * g.n
        assert summed.min_degree() >= g.min_degree() + 1


def test_minkowski_adds_perfect_matching():
    g = build("c3")
    summed = minkowski_sum(g, pyth_unit_vector(Fraction(1, 2)))
    # translated copy at ids n..2n-1, matched to the originals
    assert all(summed.has_edge(v, v + g.n) for v in range(g.n))
    assert summed.m >= 2 * g.m + g.n


def test_minkowski_collision_detected():
    g = build("c3")
    # translating by a triangle edge maps vertex 0 onto vertex 1
    with pytest.raises(VertexCollision):
        minkowski_sum(g, pyth_unit_vector(0))


def test_minkowski_needs_geometry():
    with pytest.raises(ValueError):
        minkowski_sum(UdGraph(2, [(0, 1)]), pyth_unit_vector(Fraction(1, 2)))


def test_double_minkowski_is_the_counterexample():
    g = build("c3_mink2")
    assert g.n == 12
    assert g.min_degree() == 4
    assert max_clique(g) == 3


def test_lattice_points_and_patches():
    assert lattice_point(0, 0) == lattice_point(1, -1) - lattice_point(1, -1)
    assert sq_dist(lattice_point(0, 0), lattice_point(1, 0)) == 1
    assert sq_dist(lattice_point(0, 0), lattice_point(0, 1)) == 1
    assert sq_dist(lattice_point(1, 0), lattice_point(0, 1)) == 1
    patch = triangular_patch(1)
    assert patch.n == 7
    assert max(patch.degree(v) for v in range(7)) == 6


@settings(max_examples=10)
@given(st.integers(min_value=0, max_value=2))
def test_patch_sizes(radius):
    patch = triangular_patch(radius)
    assert patch.n == 1 + 3 * radius * (radius + 1)
    if radius > 0:
        assert max_clique(patch) == 3


def test_spindle_field_is_closed():
    # every coordinate lives in Q(sqrt(3), sqrt(11), sqrt(33))
    g = moser_spindle()
    allowed = {1, 3, 11, 33}
    for p in g.points:
        assert set(p.x.generators) <= allowed
        assert set(p.y.generators) <= allowed
