"""Two plane colorings: a hexagonal 7-coloring and a 2-coloring of Q^2.

Hex scheme: flat-top regular hexagons of side s tile the plane as the
Voronoi cells of the lattice i*(3s/2, sqrt(3)/2*s) + j*(0, sqrt(3)*s);
cell (i, j) gets color (alpha*i + beta*j) mod 7. Any two points at
distance 1 then get different colors provided 2s < 1 (so no unit pair
fits inside one cell) and the closest same-color cells are separated by
more than 1. Membership queries round cube coordinates, which picks the
nearest lattice center, so cells are effectively half-open along their
boundaries. This scheme lives in floats; exactness belongs to the graph
modules.

Rational scheme: every rational splits uniquely as a dyadic part c/2^k
in [0, 1) plus a part with odd denominator; par(a/b) = a mod 2 is well
defined for odd b. Coloring a point by the parity sum of the odd parts
of its coordinates 2-colors the rational plane: a rational unit step
(A/q, B/q) has A^2 + B^2 = q^2 with q odd, hence A + B odd, and adds no
dyadic part, so the color always flips across it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from shapely.geometry import Polygon

from .errors import NonFiniteInput
from .geometry import pyth_unit_vector

_SQRT3 = math.sqrt(3.0)
_SCAN_REACH = 5  # hex rings inspected by the validity scan
_BOUNDARY_GUARD = 1e-9


def _flower_distinct(alpha: int, beta: int) -> bool:
    """A cell and its 6 neighbors get 7 distinct colors under (alpha, beta)."""
    flower = {0, alpha, -alpha, beta, -beta, alpha - beta, beta - alpha}
    return len({c % 7 for c in flower}) == 7


def _unit_cell_polygon(i: int, j: int) -> Polygon:
    cx = 1.5 * i
    cy = _SQRT3 * (0.5 * i + j)
    return Polygon(
        (cx + math.cos(a), cy + math.sin(a))
        for a in (k * math.pi / 3.0 for k in range(6))
    )


@lru_cache(maxsize=None)
def _same_color_separation(alpha: int, beta: int) -> float:
    """Closest approach of distinct same-color cells, at unit side.

    Scans every cell within hex distance _SCAN_REACH of the origin cell;
    same-color cells further out are strictly farther away than the
    nearest ring found here.
    """
    origin = _unit_cell_polygon(0, 0)
    best = math.inf
    for i in range(-_SCAN_REACH, _SCAN_REACH + 1):
        for j in range(-_SCAN_REACH, _SCAN_REACH + 1):
            if (i, j) == (0, 0):
                continue
            if (abs(i) + abs(j) + abs(i + j)) // 2 > _SCAN_REACH:
                continue
            if (alpha * i + beta * j) % 7 != 0:
                continue
            best = min(best, origin.distance(_unit_cell_polygon(i, j)))
    return best


def hex7_validity_window(coeffs: tuple[int, int] | None = None) -> tuple[float, float]:
    """Open interval of sides for which the scheme properly avoids distance 1.

    Upper end: 1/2, from keeping the cell diameter 2s below 1. Lower end:
    1 over the same-color cell separation at unit side, from keeping the
    nearest same-color points further apart than 1.
    """
    alpha, beta = coeffs if coeffs is not None else _default_coeffs()
    separation = _same_color_separation(alpha, beta)
    # touching same-color cells leave no valid side at all
    lo = math.inf if separation == 0.0 else 1.0 / separation
    return lo, 0.5


@lru_cache(maxsize=1)
def _default_coeffs() -> tuple[int, int]:
    """Lexicographically smallest coefficient pair with a nonempty window."""
    for alpha in range(1, 7):
        for beta in range(1, 7):
            if not _flower_distinct(alpha, beta):
                continue
            lo, hi = 1.0 / _same_color_separation(alpha, beta), 0.5
            if lo < hi:
                return alpha, beta
    raise AssertionError("no valid coefficient pair mod 7")


@dataclass(frozen=True)
class HexScheme:
    """7-coloring parameters; construction validates the side choice."""

    side: float = 0.45
    coeffs: tuple[int, int] | None = None

    def __post_init__(self):
        if not (math.isfinite(self.side) and self.side > 0):
            raise ValueError("side must be a positive finite float")
        if self.coeffs is None:
            object.__setattr__(self, "coeffs", _default_coeffs())
        lo, hi = hex7_validity_window(self.coeffs)
        if not lo < self.side < hi:
            raise ValueError(
                f"side {self.side} outside validity window ({lo}, {hi})"
            )

    def cell_center(self, i, j):
        s = self.side
        return 1.5 * s * np.asarray(i, dtype=float), _SQRT3 * s * (
            0.5 * np.asarray(i, dtype=float) + np.asarray(j, dtype=float)
        )

    def cell_of(self, xs, ys) -> tuple[np.ndarray, np.ndarray]:
        """Axial cell indices by cube rounding; vectorized, half-open cells."""
        s = self.side
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        qf = (2.0 / 3.0) * xs / s
        rf = ys / (_SQRT3 * s) - xs / (3.0 * s)
        sf = -qf - rf
        q = np.rint(qf)
        r = np.rint(rf)
        t = np.rint(sf)
        dq = np.abs(q - qf)
        dr = np.abs(r - rf)
        dt = np.abs(t - sf)
        fix_q = (dq >= dr) & (dq >= dt)
        fix_r = ~fix_q & (dr >= dt)
        q = np.where(fix_q, -r - t, q)
        r = np.where(fix_r, -q - t, r)
        return q.astype(np.int64), r.astype(np.int64)

    def color_of_cell(self, i, j):
        alpha, beta = self.coeffs
        return (alpha * np.asarray(i) + beta * np.asarray(j)) % 7

    def colors(self, xs, ys) -> np.ndarray:
        i, j = self.cell_of(xs, ys)
        return self.color_of_cell(i, j)

    def boundary_margin(self, xs, ys) -> np.ndarray:
        """Distance from each point to its cell's boundary.

        The cells are Voronoi cells of the center lattice, so the boundary
        distance is the least distance to a bisector with one of the 6
        neighbor centers: (|p - c'|^2 - |p - c|^2) / (2 * sqrt(3) * s).
        """
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        i, j = self.cell_of(xs, ys)
        cx, cy = self.cell_center(i, j)
        own = (xs - cx) ** 2 + (ys - cy) ** 2
        margin = np.full(xs.shape, np.inf)
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)):
            nx, ny = self.cell_center(i + di, j + dj)
            other = (xs - nx) ** 2 + (ys - ny) ** 2
            margin = np.minimum(margin, other - own)
        return margin / (2.0 * _SQRT3 * self.side)


DEFAULT_HEX = HexScheme()


def hex7_color(p, scheme: HexScheme = DEFAULT_HEX) -> int:
    """Color in 0..6 of a single point (x, y)."""
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise NonFiniteInput(f"({p[0]}, {p[1]})")
    return int(scheme.colors(np.array([x]), np.array([y]))[0])


def hex7_verify(
    samples: int,
    seed: int,
    scheme: HexScheme = DEFAULT_HEX,
    box: float = 10.0,
) -> dict:
    """Sample unit-distance pairs and count same-color failures.

    Pairs with either endpoint within _BOUNDARY_GUARD of a cell boundary
    are discarded and redrawn (counted in `regenerated`), so failures are
    never rounding artifacts. min_same_color_distance is the distance of
    the closest same-colored sampled pair, null when all differ (every
    sampled pair is at distance 1.0).
    """
    rng = np.random.default_rng(seed)
    done = 0
    failures = 0
    regenerated = 0
    min_same = None
    while done < samples:
        batch = min(samples - done, 200_000)
        px = rng.uniform(-box, box, batch)
        py = rng.uniform(-box, box, batch)
        theta = rng.uniform(0.0, 2.0 * math.pi, batch)
        qx = px + np.cos(theta)
        qy = py + np.sin(theta)
        clean = (scheme.boundary_margin(px, py) > _BOUNDARY_GUARD) & (
            scheme.boundary_margin(qx, qy) > _BOUNDARY_GUARD
        )
        regenerated += int(batch - clean.sum())
        same = scheme.colors(px[clean], py[clean]) == scheme.colors(
            qx[clean], qy[clean]
        )
        failures += int(same.sum())
        if same.any():
            min_same = 1.0
        done += int(clean.sum())
    lo, hi = hex7_validity_window(scheme.coeffs)
    return {
        "samples": samples,
        "failures": failures,
        "regenerated": regenerated,
        "min_same_color_distance": min_same,
        "side": scheme.side,
        "coeffs": list(scheme.coeffs),
        "window": [lo, hi],
    }


# -- rational plane -----------------------------------------------------------


@dataclass(frozen=True)
class RatPoint:
    """Point of Q^2; Fraction keeps coordinates in lowest terms."""

    x: Fraction
    y: Fraction

    def __init__(self, x, y):
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __str__(self) -> str:
        return f"({self.x}; {self.y})"


def dyadic_split(a: Fraction) -> tuple[Fraction, Fraction]:
    """a = dyadic + odd with dyadic = c/2^k in [0, 1) and odd denominator odd.

    With denominator 2^k * m (m odd), c is the unique solution in
    [0, 2^k) of c * m = numerator (mod 2^k).
    """
    d = a.denominator
    k = (d & -d).bit_length() - 1
    if k == 0:
        return Fraction(0), a
    m = d >> k
    c = a.numerator * pow(m, -1, 1 << k) % (1 << k)
    dyadic = Fraction(c, 1 << k)
    return dyadic, a - dyadic


def odd_parity(a: Fraction) -> int:
    """Numerator parity; well defined only for odd denominators."""
    if a.denominator % 2 == 0:
        raise ValueError(f"{a} has an even denominator")
    return a.numerator % 2


def rational2_color(p: RatPoint) -> int:
    """Parity sum of the odd parts of the coordinates; flips on unit steps."""
    return (
        odd_parity(dyadic_split(p.x)[1]) + odd_parity(dyadic_split(p.y)[1])
    ) % 2


def random_unit_rational_pair(rng) -> tuple[RatPoint, RatPoint]:
    """A random rational point and its translate by a random rational unit.

    rng is a random.Random or a seed for one. The step is the Pythagorean
    unit vector of a small random rational, so the pair is at exact
    distance 1.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    base = RatPoint(
        Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
        Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
    )
    t = Fraction(rng.randint(0, 12), rng.randint(1, 12))
    u = pyth_unit_vector(t)
    step_x = u.ux.as_rational()
    step_y = u.uy.as_rational()
    if rng.random() < 0.5:
        step_x, step_y = -step_y, step_x
    return base, RatPoint(base.x + step_x, base.y + step_y)


def rational_bipartition(points) -> list[int]:
    """BFS 2-coloring of the exact unit-distance graph on rational points.

    Components are anchored at their smallest index with class 0. Raises
    ValueError on an odd cycle, which no rational point set can produce.
    """
    pts = list(points)
    n = len(pts)
    adjacency = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dx = pts[i].x - pts[j].x
            dy = pts[i].y - pts[j].y
            if dx * dx + dy * dy == 1:
                adjacency[i].append(j)
                adjacency[j].append(i)
    classes = [-1] * n
    for root in range(n):
        if classes[root] >= 0:
            continue
        classes[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in adjacency[v]:
                if classes[u] < 0:
                    classes[u] = 1 - classes[v]
                    queue.append(u)
                elif classes[u] == classes[v]:
                    raise ValueError("odd cycle in a rational point set")
    return classes
