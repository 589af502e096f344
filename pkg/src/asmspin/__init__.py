"""Exact toolkit for higher spin alternating sign matrices.

Validated conversions among six equivalent representations, exact
transfer-matrix counting, counting-polynomial interpolation over exact
rationals, and constructive decomposition of polytope points into convex
combinations of standard alternating sign matrices.
"""

from .bijections import (
    asm_to_corner,
    asm_to_edge,
    complementary_to_edge,
    corner_to_asm,
    corner_to_edge,
    edge_to_asm,
    edge_to_complementary,
    edge_to_corner,
    edge_to_triangle,
    triangle_to_edge,
)
from .core import (
    AsmMatrix,
    ComplementaryEdgePair,
    CornerSumMatrix,
    EdgeMatrixPair,
    MonotoneTriangle,
    VertexType,
    enumerate_vertex_types,
    is_semimagic,
    validate_asm,
    validate_complementary_pair,
    validate_corner_sum,
    validate_edge_pair,
    validate_monotone_triangle,
)
from .counting import (
    CountQuery,
    count,
    count_asm_formula_n1,
    enumerate_asm,
    partition_function,
    semimagic_weights,
    uniform_weights,
)
from .ehrhart import EhrhartPolynomial, evaluate, interpolate, reciprocity_report
from .errors import AsmError, ValidationError
from .paths import (
    PathFamily,
    VertexLinking,
    count_fpl_expansions,
    count_vertex_linkings,
    edge_to_paths,
    enumerate_vertex_linkings,
    paths_to_edge,
)
from .polytope import (
    ConvexDecomposition,
    EdgePoint,
    NonIntegerCycle,
    PolytopePoint,
    decompose,
    edge_to_point,
    find_noninteger_cycle,
    membership,
    point_to_edge,
    split_point,
)
from .size3 import (
    Composition6,
    Composition7,
    count_closed_form_3,
    enumerate_compositions,
    theta,
    theta_inverse,
    theta_prime,
    theta_prime_inverse,
)

__version__ = "0.1.0"
