"""Combinatorics of abelian covers of (possibly non-normal) surfaces.

The package models covers purely through exact combinatorial data: finite
abelian groups and characters, intersection lattices of the components,
branch data with cyclic-pair labels, and incidence declarations for the
double curves and their marked points.  On top of that it decides gluability
of component covers, classifies the local singularities of slc Z2^r-covers
against nine embedded (and exhaustively regenerable) tables, and computes
K^2, chi(O) and Cartier indices of the glued cover.
"""

from .classifier import (
    DC,
    SMOOTH,
    Classification,
    ClassificationGapError,
    LocalConfig,
    RelationCode,
    blowup_transform,
    chi_contribution,
    classify,
    enumerate_table,
    iota_index,
    iterate_blowups,
    normalize_config,
    realize_table_row,
    relation_code,
)
from .covers import (
    BranchDatum,
    BuildingData,
    HurwitzDivisor,
    check_fundamental_relations,
    hurwitz_divisor,
    inertia_at_point,
    local_equations,
    slc_check,
    solve_line_bundles,
    structure_flags,
)
from .gluing import (
    GluingProblem,
    glue_check,
    incidence_sets,
    local_config_at_point,
    m_degree,
    make_problem,
    relevant_points,
)
from .groups import (
    Character,
    CyclicPair,
    FiniteAbelianGroup,
    GroupElement,
    Residue,
    Subgroup,
    character_exponent,
    component_sum_hom,
    epsilon,
    residual_index,
    subgroup_generated,
)
from .invariants import (
    INDETERMINATE,
    EigensheafReport,
    InvariantReport,
    chi_OX,
    chi_eigensheaf,
    chi_normalized_B,
    compute_report,
    global_cartier_index,
    k_square,
)
from .schema import InputDocument, SchemaError, dumps_document, parse_document, render_document
from .surfaces import (
    BRANCH,
    DOUBLE,
    CurveDecl,
    CurveSide,
    GdcSurface,
    PointDecl,
    QDivisorClass,
    SmoothSurfaceModel,
    ValidationReport,
    cohomology,
    euler_char_inverse,
    intersect,
    lattice_surface,
    p1_cohomology,
    p1xp1,
    p2,
    validate_surface,
)
from .tables import TableRow, find_row, table_rows
from .worked_examples import plane_cycle_cover, two_component_cover

__version__ = "0.1.0"
