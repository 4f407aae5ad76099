"""
cgrank package.
Exact Chvátal-Gomory closures, CG-rank, notch and gap of 0/1 point sets.
"""

from .config import Settings, load_settings, default_rank_cap
from .errors import (
    CGRankError,
    ConfigError,
    DimensionMismatchError,
    PreconditionError,
    BudgetExceededError,
    NormBudgetExceededError,
    GapCapExceededError,
    IntegerPointMismatchError,
    NoFeasibleInBallError,
    InputFormatError,
    ConstructionError
)
from .cube import (
    CubePoint,
    PointSet,
    CubeFace,
    Switching,
    SwitchedForm,
    LinIneq,
    switch_points,
    switch_ineq,
    enumerate_faces,
    face_intersects,
    primitive_form,
    spanned_by_01
)
from .polyhedra import (
    HPolytope,
    VPolytope,
    box,
    hull_facets,
    vertices,
    lp_min,
    is_valid,
    remove_redundancy,
    polytopes_equal,
    integer_points
)
from .subdivision import forbidden_graph, max_subdivision_order, contains_clique_subdivision, find_clique_subdivision
from .parameters import (
    notch,
    gap,
    GapCertificate,
    Notch3Tag,
    classify_notch3_facet,
    classify_hull_facet,
    oracle_optimize,
    oracle_ball_bound
)
from .closure import (
    elementary_closure,
    closure_sequence,
    cg_rank,
    validity_depth,
    approx_closure_check,
    RankCertificate,
    dump_certificate,
    load_certificate
)
from .generators import (
    worst_relaxation,
    unit_relaxation,
    badfacet_instance,
    badfacet_coefficients,
    notch_p_example,
    support_at_least,
    random_pointset
)
from .formats import parse_pointset, emit_pointset, parse_hpolytope, emit_hpolytope, parse_inequality
from .report import VerificationReport, Status

__all__ = [
    'Settings',
    'load_settings',
    'default_rank_cap',
    'CGRankError',
    'ConfigError',
    'DimensionMismatchError',
    'PreconditionError',
    'BudgetExceededError',
    'NormBudgetExceededError',
    'GapCapExceededError',
    'IntegerPointMismatchError',
    'NoFeasibleInBallError',
    'InputFormatError',
    'ConstructionError',
    'CubePoint',
    'PointSet',
    'CubeFace',
    'Switching',
    'SwitchedForm',
    'LinIneq',
    'switch_points',
    'switch_ineq',
    'enumerate_faces',
    'face_intersects',
    'primitive_form',
    'spanned_by_01',
    'HPolytope',
    'VPolytope',
    'box',
    'hull_facets',
    'vertices',
    'lp_min',
    'is_valid',
    'remove_redundancy',
    'polytopes_equal',
    'integer_points',
    'forbidden_graph',
    'max_subdivision_order',
    'contains_clique_subdivision',
    'find_clique_subdivision',
    'notch',
    'gap',
    'GapCertificate',
    'Notch3Tag',
    'classify_notch3_facet',
    'classify_hull_facet',
    'oracle_optimize',
    'oracle_ball_bound',
    'elementary_closure',
    'closure_sequence',
    'cg_rank',
    'validity_depth',
    'approx_closure_check',
    'RankCertificate',
    'dump_certificate',
    'load_certificate',
    'worst_relaxation',
    'unit_relaxation',
    'badfacet_instance',
    'badfacet_coefficients',
    'notch_p_example',
    'support_at_least',
    'random_pointset',
    'parse_pointset',
    'emit_pointset',
    'parse_hpolytope',
    'emit_hpolytope',
    'parse_inequality',
    'VerificationReport',
    'Status'
]
