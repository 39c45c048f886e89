"""Hexagonal 7-coloring and the rational 2-coloring, with their oracles."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from udplane.errors import NonFiniteInput
from udplane.geometry import pyth_unit_vector
from udplane.plane import (
    DEFAULT_HEX,
    HexScheme,
    RatPoint,
    dyadic_split,
    hex7_color,
    hex7_validity_window,
    hex7_verify,
    odd_parity,
    random_unit_rational_pair,
    rational2_color,
    rational_bipartition,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=40)


# -- hexagonal scheme ---------------------------------------------------------


def test_default_scheme_parameters():
    assert DEFAULT_HEX.side == 0.45
    assert DEFAULT_HEX.coeffs == (1, 3)


def test_flower_has_seven_distinct_colors():
    center = DEFAULT_HEX.color_of_cell(0, 0)
    ring = {
        int(DEFAULT_HEX.color_of_cell(i, j))
        for i, j in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
    }
    assert len(ring | {int(center)}) == 7


def test_validity_window_values():
    lo, hi = hex7_validity_window()
    assert hi == 0.5
    # the nearest same-color boundary gap at unit side is sqrt(7)
    assert lo == pytest.approx(1 / math.sqrt(7), rel=1e-9)
    assert lo < 0.45 < hi
    assert not lo < 0.1
    assert not 0.5 < hi


def test_side_outside_window_rejected():
    with pytest.raises(ValueError):
        HexScheme(side=0.5)
    with pytest.raises(ValueError):
        HexScheme(side=0.1)
    with pytest.raises(ValueError):
        HexScheme(side=float("nan"))
    HexScheme(side=0.4)  # inside


def test_origin_cell_is_color_zero():
    assert hex7_color((0.0, 0.0)) == 0


def test_nonfinite_rejected():
    with pytest.raises(NonFiniteInput):
        hex7_color((float("inf"), 0.0))
    with pytest.raises(NonFiniteInput):
        hex7_color((0.0, float("nan")))


def test_cell_rounding_picks_nearest_center():
    rng = np.random.default_rng(5)
    xs = rng.uniform(-8, 8, 4000)
    ys = rng.uniform(-8, 8, 4000)
    i, j = DEFAULT_HEX.cell_of(xs, ys)
    cx, cy = DEFAULT_HEX.cell_center(i, j)
    own = np.hypot(xs - cx, ys - cy)
    for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)):
        nx, ny = DEFAULT_HEX.cell_center(i + di, j + dj)
        other = np.hypot(xs - nx, ys - ny)
        assert (own <= other + 1e-12).all()


def test_periodicity_of_color_sublattice():
    # (1, 2) satisfies alpha*1 + beta*2 = 7, so its lattice vector
    # translates every cell to a same-colored cell
    rng = np.random.default_rng(11)
    xs = rng.uniform(-5, 5, 2000)
    ys = rng.uniform(-5, 5, 2000)
    margin = DEFAULT_HEX.boundary_margin(xs, ys)
    keep = margin > 1e-6
    xs, ys = xs[keep], ys[keep]
    px, py = DEFAULT_HEX.cell_center(1, 2)
    moved = DEFAULT_HEX.colors(xs + px, ys + py)
    assert (moved == DEFAULT_HEX.colors(xs, ys)).all()


def test_boundary_margin_is_small_near_edges():
    s = DEFAULT_HEX.side
    # the midpoint of the segment between two adjacent centers lies on a
    # cell boundary
    cx, cy = DEFAULT_HEX.cell_center(1, 0)
    edge_x, edge_y = cx / 2.0, cy / 2.0
    margin = DEFAULT_HEX.boundary_margin(
        np.array([edge_x, 0.0]), np.array([edge_y, 0.0])
    )
    assert abs(margin[0]) < 1e-12
    assert margin[1] > 0.3 * s


def test_verify_report_shape_and_determinism():
    a = hex7_verify(20_000, seed=123)
    b = hex7_verify(20_000, seed=123)
    assert a == b
    assert a["failures"] == 0
    assert a["samples"] == 20_000
    assert a["min_same_color_distance"] is None
    assert a["window"][0] < a["side"] < a["window"][1]


def test_verify_catches_a_broken_scheme():
    # constant coloring: every unit pair is a failure; bypass the
    # validating constructor to forge the broken scheme
    broken = object.__new__(HexScheme)
    object.__setattr__(broken, "side", 0.45)
    object.__setattr__(broken, "coeffs", (7, 7))  # alpha*i+beta*j always 0
    report = hex7_verify(500, seed=0, scheme=broken)
    assert report["failures"] == 500
    assert report["min_same_color_distance"] == 1.0


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_sampled_unit_pairs_bichromatic(seed):
    report = hex7_verify(300, seed=seed)
    assert report["failures"] == 0


# -- rational scheme ----------------------------------------------------------


@settings(max_examples=80)
@given(rationals)
def test_dyadic_split_shape(a):
    dyadic, odd = dyadic_split(a)
    assert dyadic + odd == a
    assert 0 <= dyadic < 1
    assert dyadic.denominator & (dyadic.denominator - 1) == 0  # power of 2
    assert odd.denominator % 2 == 1


@settings(max_examples=80)
@given(rationals, rationals)
def test_odd_parity_is_homomorphism_on_odd_denominators(a, b):
    if a.denominator % 2 == 0 or b.denominator % 2 == 0:
        return
    assert odd_parity(a + b) == (odd_parity(a) + odd_parity(b)) % 2


def test_odd_parity_rejects_even_denominator():
    with pytest.raises(ValueError):
        odd_parity(Fraction(1, 2))


def test_rational2_color_examples():
    assert rational2_color(RatPoint(0, 0)) == 0
    assert rational2_color(RatPoint(Fraction(3, 5), Fraction(4, 5))) == 1
    assert rational2_color(RatPoint(Fraction(1, 2), 0)) == 0


@settings(max_examples=60)
@given(rationals, rationals, st.fractions(min_value=0, max_value=5, max_denominator=12))
def test_color_flips_across_any_rational_unit_step(x, y, t):
    u = pyth_unit_vector(t)
    p = RatPoint(x, y)
    q = RatPoint(x + u.ux.as_rational(), y + u.uy.as_rational())
    assert rational2_color(p) != rational2_color(q)


def test_random_unit_pairs_are_exact_and_bichromatic():
    rng = random.Random(99)
    for _ in range(300):
        a, b = random_unit_rational_pair(rng)
        dx, dy = a.x - b.x, a.y - b.y
        assert dx * dx + dy * dy == 1
        assert rational2_color(a) != rational2_color(b)


def test_pair_generator_accepts_plain_seed():
    assert random_unit_rational_pair(4) == random_unit_rational_pair(4)


def test_bipartition_agrees_with_formula():
    rng = random.Random(17)
    for _ in range(15):
        pts = [RatPoint(rng.randint(-3, 3), rng.randint(-3, 3))]
        for _ in range(50):
            base = pts[rng.randrange(len(pts))]
            t = Fraction(rng.randint(0, 8), rng.randint(1, 8))
            u = pyth_unit_vector(t)
            q = RatPoint(base.x + u.ux.as_rational(), base.y + u.uy.as_rational())
            if q not in pts:
                pts.append(q)
        classes = rational_bipartition(pts)
        colors = [rational2_color(p) for p in pts]
        # agreement up to a global flip, checked per connected component:
        # the bipartition anchors each component root at class 0
        roots = {}
        for idx in range(len(pts)):
            comp = _component_of(pts, idx)
            if comp not in roots:
                roots[comp] = idx
            anchor = roots[comp]
            expected = (colors[idx] + colors[anchor]) % 2
            assert (classes[idx] + classes[anchor]) % 2 == expected


def _component_of(pts, idx):
    """Stable component key: smallest reachable index."""
    seen = {idx}
    frontier = [idx]
    while frontier:
        v = frontier.pop()
        for u in range(len(pts)):
            if u in seen:
                continue
            dx, dy = pts[v].x - pts[u].x, pts[v].y - pts[u].y
            if dx * dx + dy * dy == 1:
                seen.add(u)
                frontier.append(u)
    return min(seen)


def test_bipartition_no_odd_cycle_on_rational_points():
    # a 4-cycle with rational unit steps
    pts = [
        RatPoint(0, 0),
        RatPoint(Fraction(3, 5), Fraction(4, 5)),
        RatPoint(Fraction(3, 5) + Fraction(4, 5), Fraction(4, 5) - Fraction(3, 5)),
        RatPoint(Fraction(4, 5), -Fraction(3, 5)),
    ]
    classes = rational_bipartition(pts)
    assert classes == [0, 1, 0, 1]
