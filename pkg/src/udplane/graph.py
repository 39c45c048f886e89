"""Finite unit-distance graphs and their structural analysis.

A UdGraph is a simple undirected graph over vertex ids 0..n-1, stored as
dense bit rows (one Python int per vertex) for O(1) edge queries. A graph
may carry exact vertex positions; when it does, the edge set is forced by
the geometry: edge(i, j) holds iff the points are at exact unit distance.
Abstract graphs (no points) are allowed for solver testing.

Tie-breaking is smallest-index-first everywhere so that reports and
serializations are reproducible byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicatePoint, ParseError
from .geometry import EPoint, is_unit


@dataclass(frozen=True)
class DegeneracyReport:
    """Outcome of the greedy minimum-degree elimination.

    Eliminating vertices in elimination_order, each vertex has at most
    `degeneracy` neighbors among the vertices not yet eliminated; the bound
    is tight because it is the maximum degree seen at removal time.
    """

    degeneracy: int
    elimination_order: tuple[int, ...]
    min_degree: int


class UdGraph:
    """Immutable simple graph, optionally with exact geometric positions."""

    __slots__ = ("n", "_rows", "points")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        points: Sequence[EPoint] | None = None,
        _trusted: bool = False,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        pts = tuple(points) if points is not None else None
        if pts is not None:
            if len(pts) != n:
                raise ValueError("points length must equal vertex count")
            if not _trusted:
                _check_geometry(pts, rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", tuple(rows))
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("UdGraph is immutable")

    # -- queries -----------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._rows[v])

    def row(self, v: int) -> int:
        """Adjacency of v as a bitmask."""
        return self._rows[v]

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self._rows[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in _bits(rest))
        return out

    def is_geometric(self) -> bool:
        return self.points is not None

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return min(self.degree(v) for v in range(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UdGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self._rows == other._rows
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows, self.points))

    def __repr__(self) -> str:
        kind = "geometric" if self.is_geometric() else "abstract"
        return f"<UdGraph {kind} n={self.n} m={self.m}>"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_geometry(points: Sequence[EPoint], rows: list[int]) -> None:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if points[i] == points[j]:
                raise DuplicatePoint(i, j)
            if is_unit(points[i], points[j]) != bool(rows[i] >> j & 1):
                raise ValueError(
                    f"edge set not forced by geometry at pair ({i}, {j})"
                )


def from_points(points: Sequence[EPoint]) -> UdGraph:
    """Geometric graph with an edge for every exact unit-distance pair."""
    pts = list(points)
    n = len(pts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i] == pts[j]:
                raise DuplicatePoint(i, j)
            if is_unit(pts[i], pts[j]):
                edges.append((i, j))
    return UdGraph(n, edges, pts, _trusted=True)


def degeneracy(g: UdGraph) -> DegeneracyReport:
    """Greedy minimum-degree elimination; ties broken by smallest id."""
    if g.n < 1:
        raise ValueError("degeneracy needs at least one vertex")
    alive = (1 << g.n) - 1
    degs = [g.degree(v) for v in range(g.n)]
    min_degree = min(degs)
    order: list[int] = []
    worst = 0
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if alive >> v & 1 and (best < 0 or degs[v] < degs[best]):
                best = v
        worst = max(worst, degs[best])
        order.append(best)
        alive &= ~(1 << best)
        for u in _bits(g.row(best) & alive):
            degs[u] -= 1
    return DegeneracyReport(worst, tuple(order), min_degree)


def max_clique(g: UdGraph) -> int:
    """Exact clique number via branch and bound."""
    return len(max_clique_vertices(g))


def max_clique_vertices(g: UdGraph) -> tuple[int, ...]:
    """Lexicographically first maximum clique (deterministic search order)."""
    best: list[int] = []
    rows = [g.row(v) for v in range(g.n)]

    def expand(current: list[int], candidates: int) -> None:
        nonlocal best
        if len(current) + candidates.bit_count() <= len(best):
            return
        if not candidates:
            if len(current) > len(best):
                best = current[:]
            return
        while candidates:
            if len(current) + candidates.bit_count() <= len(best):
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            current.append(v)
            expand(current, candidates & rows[v])
            current.pop()

    expand([], (1 << g.n) - 1)
    return tuple(best)


# -- serialization ----------------------------------------------------------


def to_dimacs(g: UdGraph) -> str:
    """DIMACS col format with 1-based vertex ids."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> UdGraph:
    """Parse DIMACS col; produces an abstract graph."""
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except (ValueError, IndexError):
                raise ParseError(f"bad edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge ({u}, {v}) out of range", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    g = UdGraph(n, edges)
    if g.m != declared_m:
        raise ParseError(
            f"problem line declares {declared_m} edges, found {g.m}"
        )
    return g


def to_json(g: UdGraph) -> str:
    """JSON form {n, points?, edges} with exact textual coordinates."""
    obj: dict = {"n": g.n}
    if g.points is not None:
        obj["points"] = [str(p) for p in g.points]
    obj["edges"] = g.edges()
    return json.dumps(obj)


def from_json(text: str) -> UdGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("graph JSON needs keys 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a nonnegative integer")
    edges = []
    for e in obj["edges"]:
        if not (
            isinstance(e, list)
            and len(e) == 2
            and all(isinstance(x, int) for x in e)
        ):
            raise ParseError(f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))
    points = None
    if "points" in obj:
        try:
            points = [EPoint.parse(s) for s in obj["points"]]
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    try:
        return UdGraph(n, edges, points)
    except (ValueError, DuplicatePoint) as exc:
        raise ParseError(str(exc)) from None
