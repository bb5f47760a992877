"""Families of subsets as points of a cube: finite engines, symbolic chains,
and certificate checks over both."""

from .certificates import (
    BasicOpen,
    Certificate,
    SubbasicCond,
    atom_closure_certificate,
    atom_closure_expression,
    basic_contains,
    disjoint_closure_certificate,
    disjoint_closure_expression,
    interval_identity_all,
    interval_identity_check,
    interval_identity_sweep,
    is_limit_point_sampled,
    limit_vs_union_check,
    ordinal_homeo_check,
    sequence_convergence_check,
)
from .cube import (
    Family,
    GroundSet,
    PointSet,
    enumerate_families,
    family_join,
    family_leq,
    family_meet,
)
from .famexpr import (
    ChainInitials,
    DownPow,
    Explicit,
    FamExpr,
    LatGen,
    LatGenSing,
    NearDown,
    TopGen,
    UnionFam,
    expr_from_json,
    fam_distinct,
    fam_is_topology_sym,
    fam_member,
)
from .lattice import (
    FiniteSublattice,
    OmegaChain,
    chain_completion_check,
    chain_completion_finite,
    chain_completion_omega,
    is_complete_sublattice,
    is_join_complete_family_set,
    join_completeness_witness,
    join_escape_witness,
    lat_generate,
    relations_set,
)
from .report import FAIL, INCONCLUSIVE, PASS, Report, Stopwatch
from .topology import (
    Topology,
    all_topologies,
    are_disjoint,
    atoms_of,
    count_topologies,
    embedding_check,
    inject_topology,
    is_bounded_sublattice,
    is_topology,
    top_generate,
)
from .ultra import (
    PrincipalUF,
    all_ultrafilters,
    all_ultratopologies,
    extend_trace,
    subbase_correspondence_check,
    trace,
    trace_bijection_check,
    trace_family,
    trace_reconstruction_check,
    ultra_cover_check,
    ultrafilters_avoiding,
    ultratopologies_at,
    ultratopology,
)
from .upsets import UPSet

__version__ = "0.1.0"

__all__ = [
    "BasicOpen",
    "Certificate",
    "ChainInitials",
    "DownPow",
    "Explicit",
    "FAIL",
    "FamExpr",
    "Family",
    "FiniteSublattice",
    "GroundSet",
    "INCONCLUSIVE",
    "LatGen",
    "LatGenSing",
    "NearDown",
    "OmegaChain",
    "PASS",
    "PointSet",
    "PrincipalUF",
    "Report",
    "Stopwatch",
    "TopGen",
    "Topology",
    "UPSet",
    "UnionFam",
    "all_topologies",
    "all_ultrafilters",
    "all_ultratopologies",
    "are_disjoint",
    "atom_closure_certificate",
    "atom_closure_expression",
    "atoms_of",
    "basic_contains",
    "chain_completion_check",
    "chain_completion_finite",
    "chain_completion_omega",
    "count_topologies",
    "disjoint_closure_certificate",
    "disjoint_closure_expression",
    "embedding_check",
    "enumerate_families",
    "expr_from_json",
    "extend_trace",
    "fam_distinct",
    "fam_is_topology_sym",
    "fam_member",
    "family_join",
    "family_leq",
    "family_meet",
    "inject_topology",
    "interval_identity_all",
    "interval_identity_check",
    "interval_identity_sweep",
    "is_bounded_sublattice",
    "is_complete_sublattice",
    "is_join_complete_family_set",
    "is_limit_point_sampled",
    "is_topology",
    "join_completeness_witness",
    "join_escape_witness",
    "lat_generate",
    "limit_vs_union_check",
    "ordinal_homeo_check",
    "relations_set",
    "sequence_convergence_check",
    "subbase_correspondence_check",
    "top_generate",
    "trace",
    "trace_bijection_check",
    "trace_family",
    "trace_reconstruction_check",
    "ultra_cover_check",
    "ultrafilters_avoiding",
    "ultratopologies_at",
    "ultratopology",
]
