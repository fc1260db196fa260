"""Monomial ideals of nested hypergraphs: Alexander duality, stability
of truncations, and exact multigraded Betti numbers at desk scale."""

from .betti import BettiTable, betti_table, euler_consistency_check, lcm_lattice, regularity
from .checks import CheckReport, ClaimResult, run_hypergraph_checks, run_ideal_checks
from .homology import GuardError, SimplicialComplex, matrix_rank
from .hypergraphs import (
    IncreasingHypergraph,
    build_hypergraph,
    canonical_vertex_order,
    containment_vector,
    covered_restriction,
    inclusion_ideal,
    random_instance,
    special_dual,
)
from .ideals import (
    IrreducibleComponent,
    MonomialIdeal,
    alexander_dual,
    associated_primes,
    dual_components,
    intersect_components,
    irredundant_filter,
    is_totally_ordered_ass,
    minimal_generators,
    vector_complement,
)
from .monomials import Monomial, canonical_compare, compositions
from .stability import (
    StabilityReport,
    StabilityWitness,
    dual_truncation_stable,
    intersection_truncation_stable,
    is_stable,
    is_stable_exhaustive,
    minimal_stable_truncation_degree,
    pure_power_truncation_stable,
    q_bound,
    t_bound,
    truncation_stability,
)

__all__ = [
    "BettiTable",
    "CheckReport",
    "ClaimResult",
    "GuardError",
    "IncreasingHypergraph",
    "IrreducibleComponent",
    "Monomial",
    "MonomialIdeal",
    "SimplicialComplex",
    "StabilityReport",
    "StabilityWitness",
    "alexander_dual",
    "associated_primes",
    "betti_table",
    "build_hypergraph",
    "canonical_compare",
    "canonical_vertex_order",
    "compositions",
    "containment_vector",
    "covered_restriction",
    "dual_components",
    "dual_truncation_stable",
    "euler_consistency_check",
    "inclusion_ideal",
    "intersect_components",
    "intersection_truncation_stable",
    "irredundant_filter",
    "is_stable",
    "is_stable_exhaustive",
    "is_totally_ordered_ass",
    "lcm_lattice",
    "matrix_rank",
    "minimal_generators",
    "minimal_stable_truncation_degree",
    "pure_power_truncation_stable",
    "q_bound",
    "random_instance",
    "regularity",
    "run_hypergraph_checks",
    "run_ideal_checks",
    "special_dual",
    "t_bound",
    "truncation_stability",
    "vector_complement",
]

__version__ = "0.1.0"
