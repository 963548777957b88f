"""Exact decision library for polyhedral topological symmetry groups of
complete bipartite graphs.

The package answers, for the three orientation-preserving polyhedral groups
(tetrahedral A4, octahedral S4, icosahedral A5), exactly which complete
bipartite graphs on equal parts admit a spatial embedding with that
symmetry group, and exhibits the combinatorial side of the constructions
that realize the positive cases.
"""

__version__ = "0.1.0"

from .bipartite import (
    BipartiteAut,
    FixedSubgraphShape,
    MixedParts,
    fixed_shape,
    validate_automorphism,
)
from .decide import (
    GROUPS,
    InternalMismatch,
    SweepTable,
    Verdict,
    decide,
    sweep,
    theorem_predicate,
)
from .necessity import (
    NecessityVerdict,
    enumerate_profiles,
    necessity_verdict,
    partition_feasible,
    s4_burnside_orbits,
)
from .notation import NotationError, parse_cycles, print_cycles
from .realizability import (
    CASE_DESCRIPTIONS,
    PartSizeTooSmall,
    RealizabilityResult,
    check_realizable,
)

__all__ = [
    "BipartiteAut",
    "CASE_DESCRIPTIONS",
    "FixedSubgraphShape",
    "GROUPS",
    "InternalMismatch",
    "MixedParts",
    "NecessityVerdict",
    "NotationError",
    "PartSizeTooSmall",
    "RealizabilityResult",
    "SweepTable",
    "Verdict",
    "__version__",
    "check_realizable",
    "decide",
    "enumerate_profiles",
    "fixed_shape",
    "necessity_verdict",
    "parse_cycles",
    "partition_feasible",
    "print_cycles",
    "s4_burnside_orbits",
    "sweep",
    "theorem_predicate",
    "validate_automorphism",
]
