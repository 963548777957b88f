"""Construction layer, in one namespace.

The construction side of the classification spans three implementation
modules: :mod:`.polyhedra` (exact rotation models of the solids),
:mod:`.assignments` (equivariant vertex placements per residue class), and
:mod:`.hypotheses` (edge-routing conditions and exactness witnesses).  This
module re-exports their public API so callers can treat "constructions" as a
single component.
"""

from .assignments import (
    AxisModel,
    AxisSlots,
    CenterPair,
    ClassFixedCounts,
    FixedCountReport,
    FreeOrbitBlock,
    MarkerBlock,
    NotRealizable,
    Point,
    STATED_FIXED_COUNTS,
    VertexAssignment,
    build_assignment,
    build_axis_model,
    class_label,
    fixed_count_report,
    necessity_profile_of,
    summarize_blocks,
    verify_fixed_counts,
)
from .hypotheses import (
    Arc,
    ConditionResult,
    ForcedFix,
    HypothesisReport,
    HypothesisViolation,
    NoSuchEdge,
    NoWitnessFound,
    SubgroupWitness,
    check_edge_embedding_hypotheses,
    check_subgroup_theorem,
    forced_fix_closure,
    subgroup_corollary_witness,
    verify_construction,
)
from .polyhedra import (
    AxisEntry,
    PolyhedralModel,
    build_coset_model,
    build_polyhedral_model,
    fixed_count_table,
)

__all__ = [
    "Arc",
    "AxisEntry",
    "AxisModel",
    "AxisSlots",
    "CenterPair",
    "ClassFixedCounts",
    "ConditionResult",
    "FixedCountReport",
    "ForcedFix",
    "FreeOrbitBlock",
    "HypothesisReport",
    "HypothesisViolation",
    "MarkerBlock",
    "NoSuchEdge",
    "NotRealizable",
    "NoWitnessFound",
    "Point",
    "PolyhedralModel",
    "STATED_FIXED_COUNTS",
    "SubgroupWitness",
    "VertexAssignment",
    "build_assignment",
    "build_axis_model",
    "build_coset_model",
    "build_polyhedral_model",
    "check_edge_embedding_hypotheses",
    "check_subgroup_theorem",
    "class_label",
    "fixed_count_report",
    "fixed_count_table",
    "forced_fix_closure",
    "necessity_profile_of",
    "subgroup_corollary_witness",
    "summarize_blocks",
    "verify_construction",
    "verify_fixed_counts",
]
