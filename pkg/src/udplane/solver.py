"""Exact k-colorability and chromatic number with verifiable certificates.

The decision procedure is an exhaustive branch and bound: vertices are
chosen by saturation degree (most distinctly-colored neighbors first, ties
by higher degree, then lower id), one maximum clique is precolored to break
color symmetry, and a branch is cut as soon as a vertex has k distinct
neighbor colors. The default solve is single threaded. The optional
branch-parallel mode farms the root vertex's color branches out to a
thread pool but replays the sequential branch order when combining them,
so answers, witnesses, and node counts never depend on thread count.

greedy_degeneracy_coloring is the inductive coloring argument made
executable: color along the reverse of the minimum-degree elimination
order, always taking the smallest available color, which needs at most
degeneracy + 1 colors.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, SizeMismatch
from .graph import UdGraph, degeneracy, max_clique_vertices


@dataclass(frozen=True)
class Coloring:
    """Vertex color assignment; properness is checked, never assumed."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(c < 0 or c >= self.k for c in self.colors):
            raise ValueError("color out of range")


@dataclass(frozen=True)
class ColorabilityAnswer:
    """Decision plus certificate.

    canonical marks the witness as the one the sequential search returns;
    the parallel mode preserves it by replaying the sequential branch
    order, so it is True in both modes.
    """

    colorable: bool
    witness: Coloring | None
    nodes_explored: int
    canonical: bool = True

    def __post_init__(self):
        if self.colorable and self.witness is None:
            raise ValueError("positive answer needs a witness")


def verify_coloring(g: UdGraph, coloring: Coloring) -> bool:
    """True iff no edge has both endpoints the same color."""
    if len(coloring.colors) != g.n:
        raise SizeMismatch(
            f"{len(coloring.colors)} colors for {g.n} vertices"
        )
    return all(
        coloring.colors[u] != coloring.colors[v] for u, v in g.edges()
    )


class _Search:
    """Mutable DSATUR state; one instance per (sub)search, single threaded."""

    def __init__(self, g: UdGraph, k: int, node_limit: int | None):
        self.g = g
        self.k = k
        self.node_limit = node_limit
        self.n = g.n
        self.colors = [-1] * g.n
        self.neighbor_colors = [0] * g.n  # bitmask of colors seen next door
        self.degrees = [g.degree(v) for v in range(g.n)]
        self.nodes = 0

    def assign(self, v: int, c: int) -> list[int]:
        self.colors[v] = c
        bit = 1 << c
        touched = []
        for u in self.g.neighbors(v):
            if self.colors[u] < 0 and not self.neighbor_colors[u] & bit:
                self.neighbor_colors[u] |= bit
                touched.append(u)
        return touched

    def unassign(self, v: int, c: int, touched: list[int]) -> None:
        bit = 1 << c
        for u in touched:
            self.neighbor_colors[u] ^= bit
        self.colors[v] = -1

    def select(self) -> int:
        """Uncolored vertex with max saturation, then max degree, then min id."""
        best = -1
        best_key = None
        for v in range(self.n):
            if self.colors[v] >= 0:
                continue
            key = (self.neighbor_colors[v].bit_count(), self.degrees[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def run(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded(self.nodes, self.node_limit)
        v = self.select()
        if v < 0:
            return True
        forbidden = self.neighbor_colors[v]
        if forbidden.bit_count() >= self.k:
            return False
        for c in range(self.k):
            if forbidden >> c & 1:
                continue
            touched = self.assign(v, c)
            if self.run():
                return True
            self.unassign(v, c, touched)
        return False


def _precolor_clique(search: _Search) -> bool:
    """Pin one maximum clique to colors 0, 1, ...; False if it needs > k."""
    clique = max_clique_vertices(search.g)
    if len(clique) > search.k:
        return False
    for c, v in enumerate(sorted(clique)):
        search.assign(v, c)
    return True


def is_k_colorable(
    g: UdGraph,
    k: int,
    node_limit: int | None = None,
    threads: int = 1,
) -> ColorabilityAnswer:
    """Exact decision of proper k-colorability.

    Raises BudgetExceeded when node_limit is hit; never returns a guess.
    threads > 1 runs the root color branches concurrently with results
    identical to the sequential solve, including nodes_explored.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return ColorabilityAnswer(True, Coloring((), k), 0)
    search = _Search(g, k, node_limit)
    if not _precolor_clique(search):
        return ColorabilityAnswer(False, None, 0)
    if threads > 1:
        answer = _run_parallel(g, k, search, node_limit, threads)
        if answer is not None:
            return answer
    found = search.run()
    witness = Coloring(tuple(search.colors), k) if found else None
    return ColorabilityAnswer(found, witness, search.nodes)


def _run_parallel(
    g: UdGraph,
    k: int,
    seeded: _Search,
    node_limit: int | None,
    threads: int,
) -> ColorabilityAnswer | None:
    """Explore the root vertex's color branches on a thread pool.

    Combining replays the sequential order: branches after the first
    successful color are discarded from the node count, and the budget
    check reproduces the cumulative count the sequential search enforces.
    Returns None when there is no free vertex to branch on.
    """
    if node_limit is not None and node_limit < 1:
        raise BudgetExceeded(1, node_limit)
    v = seeded.select()
    if v < 0:
        return None
    branch_colors = [
        c for c in range(k) if not seeded.neighbor_colors[v] >> c & 1
    ]

    def explore(c: int):
        sub = _Search(g, k, node_limit)
        for u, col in enumerate(seeded.colors):
            if col >= 0:
                sub.assign(u, col)
        sub.assign(v, c)
        try:
            found = sub.run()
        except BudgetExceeded:
            return None
        return found, tuple(sub.colors) if found else None, sub.nodes

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(explore, branch_colors))

    nodes = 1  # the root call the sequential search would have made
    for outcome in results:
        if outcome is None:
            # one branch alone blew the budget, so the cumulative
            # sequential count did too
            raise BudgetExceeded(node_limit + 1, node_limit)
        found, colors, branch_nodes = outcome
        nodes += branch_nodes
        if node_limit is not None and nodes > node_limit:
            raise BudgetExceeded(node_limit + 1, node_limit)
        if found:
            return ColorabilityAnswer(True, Coloring(colors, k), nodes)
    return ColorabilityAnswer(False, None, nodes)


def chromatic_number(
    g: UdGraph, threads: int = 1
) -> tuple[int, Coloring]:
    """Minimal k admitting a proper coloring, with a witness.

    Starts one below the clique lower bound (when that is still positive)
    so that infeasibility at chromatic_number - 1 is always established by
    an explicit is_k_colorable run, never inferred from the bound alone.
    """
    if g.n == 0:
        return 0, Coloring((), 0)
    lower = max(1, len(max_clique_vertices(g)))
    k = max(1, lower - 1)
    while True:
        answer = is_k_colorable(g, k, threads=threads)
        if answer.colorable:
            break
        k += 1
    assert answer.witness is not None
    return k, answer.witness


def greedy_degeneracy_coloring(g: UdGraph) -> Coloring:
    """Color in reverse elimination order with the smallest available color.

    Uses at most degeneracy + 1 colors: when a vertex is colored, only its
    neighbors later in the elimination order are already colored, and there
    are at most `degeneracy` of them.
    """
    report = degeneracy(g)
    colors = [-1] * g.n
    used = 0
    for v in reversed(report.elimination_order):
        seen = 0
        for u in g.neighbors(v):
            if colors[u] >= 0:
                seen |= 1 << colors[u]
        c = 0
        while seen >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return Coloring(tuple(colors), used)


# -- CNF export ---------------------------------------------------------------


def to_cnf(g: UdGraph, k: int) -> str:
    """DIMACS CNF for k-colorability.

    Variable v*k + c + 1 means "vertex v has color c". Clauses: one
    at-least-one-color clause per vertex and one (-u_c or -v_c) clause per
    edge and color. At-most-one clauses are omitted; the edge clauses make
    any chosen true color proper, so a model decodes by taking each
    vertex's smallest true color.
    """
    if k < 1:
        raise ValueError("k must be positive")
    lines = [f"p cnf {g.n * k} {g.n + g.m * k}"]
    for v in range(g.n):
        lines.append(" ".join(str(v * k + c + 1) for c in range(k)) + " 0")
    for u, v in g.edges():
        for c in range(k):
            lines.append(f"-{u * k + c + 1} -{v * k + c + 1} 0")
    return "\n".join(lines) + "\n"


def decode_cnf_model(g: UdGraph, k: int, true_variables) -> Coloring:
    """Coloring from a satisfying assignment (iterable of true 1-based vars)."""
    truth = set(true_variables)
    colors = []
    for v in range(g.n):
        chosen = next(
            (c for c in range(k) if v * k + c + 1 in truth), None
        )
        if chosen is None:
            raise ValueError(f"model gives vertex {v} no color")
        colors.append(chosen)
    return Coloring(tuple(colors), k)
