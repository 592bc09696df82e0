"""Exact Gromov widths of Bott-Samelson varieties from root-system
combinatorics, cross-validated through three independent routes: torus-stable
curve areas, the line-area formula, and the toric width of a Bott-tower
degeneration."""

from .bott import (
    BottCollection,
    BottFan,
    DivisorClass,
    PrimRelation,
    build_fan,
    caseline_width,
    check_smooth,
    degenerate_bott_tower,
    primitive_relations,
    relation_pairing,
    toric_width,
)
from .bscurve import (
    BSInput,
    CurveReport,
    antican_degrees,
    areas,
    bs_input,
    deg_matrix,
    gromov_width,
    lines,
    minimal_curves,
)
from .errors import CapExceeded, ChainRegionError, InputError, InvariantViolation
from .gkpoly import (
    AffineForm,
    ConditionPReport,
    GKChain,
    build_chain,
    check_condition_p,
    iter_lattice_points,
    lattice_points,
    min_affine_brute_force,
    min_affine_over_chain,
)
from .rootsys import (
    CorootVec,
    DynkinType,
    RootSystem,
    RootVec,
    WeightVec,
    build_root_system,
    fundamental_weight,
    pair,
    positive_root_count,
    positive_roots,
    reflect_coroot,
    reflect_root,
    reflect_weight,
    simple_coroot,
    simple_root,
    weight_of_root,
)
from .words import BetaSequence, ReducedCheck, betas, is_reduced, random_reduced_word

__version__ = "0.1.0"
