"""Exact workbench for finite unit-distance graphs in the plane.

Coordinates live in fields of nested square roots over the rationals, so
unit distances, duplicate points, and circle intersections are decided
exactly. On top of that sit a catalog of named graphs, an exhaustive
coloring solver with certificates, two plane-coloring schemes, and a
claims report that records what desk-scale computation can and cannot
settle about the chromatic number of the plane.
"""

from .catalog import (
    build,
    double_minkowski_triangle,
    golomb_graph,
    lattice_point,
    minkowski_sum,
    moser_spindle,
    names,
    triangular_patch,
    unit_triangle,
)
from .claims import ClaimVerdict, claims_report, evaluate_all, evaluate_claim
from .errors import (
    BudgetExceeded,
    CoincidentCenters,
    DuplicatePoint,
    NegativeRadicand,
    NonFiniteInput,
    ParseError,
    SizeMismatch,
    UnsupportedRadicand,
    VertexCollision,
    WorkbenchError,
)
from .exactnum import QNum, sqrt_rational, to_interval
from .geometry import (
    ORIGIN,
    EPoint,
    UnitVector,
    is_unit,
    pyth_unit_vector,
    rotate,
    sq_dist,
    unit_circle_pair,
)
from .graph import (
    DegeneracyReport,
    UdGraph,
    degeneracy,
    from_dimacs,
    from_json,
    from_points,
    max_clique,
    max_clique_vertices,
    to_dimacs,
    to_json,
)
from .plane import (
    HexScheme,
    RatPoint,
    dyadic_split,
    hex7_color,
    hex7_validity_window,
    hex7_verify,
    random_unit_rational_pair,
    rational2_color,
    rational_bipartition,
)
from .solver import (
    ColorabilityAnswer,
    Coloring,
    chromatic_number,
    decode_cnf_model,
    greedy_degeneracy_coloring,
    is_k_colorable,
    to_cnf,
    verify_coloring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
