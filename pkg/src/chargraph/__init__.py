"""Prime-divisor character graphs: construction, exact n-exactness decisions,
and verification of the extremal classification they satisfy."""

from .errors import (
    AsymmetricPiSizes,
    BadParameter,
    ChargraphError,
    ModelError,
    OutOfRange,
    ShapeMismatch,
    TooLarge,
    UnknownVertex,
    VertexClash,
)
from .exactness import (
    ExactnessReport,
    ExtremalCase,
    VerificationRecord,
    alternating_cycle_witness,
    check_n_exact,
    classify_extremal_case,
    verify_hamilton_characterization,
    verify_order_bound,
)
from .graphs import (
    BipartiteResult,
    CycleWitness,
    HamiltonResult,
    KnFreeResult,
    PrimeGraph,
    complement,
    connected_components,
    induced_subgraph,
    is_bipartite,
    is_hamiltonian,
    is_kn_free,
    isomorphic_small,
    join,
    longest_odd_cycle_at_least,
    max_clique,
)
from .models import (
    AbstractSolvable,
    CharModel,
    DegreeSet,
    PSL2,
    Product,
    Suzuki,
    abelian,
    c4_product,
    describe_model,
    disconnected_pair,
    graph_from_degrees,
    model_graph,
    model_support,
    psl2_degree_oracle,
    psl2_graph,
    suzuki_graph,
)
from .numtheory import (
    FACTOR_LIMIT,
    PrimePower,
    as_prime_power,
    factorize,
    is_prime,
    prime_divisors,
)
from .search import (
    ALPHA_CAP,
    AlphaRealization,
    SearchResult,
    find_alphas,
    fresh_primes,
    sweep_models,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_CAP",
    "AbstractSolvable",
    "AlphaRealization",
    "AsymmetricPiSizes",
    "BadParameter",
    "BipartiteResult",
    "CharModel",
    "ChargraphError",
    "CycleWitness",
    "DegreeSet",
    "ExactnessReport",
    "ExtremalCase",
    "FACTOR_LIMIT",
    "HamiltonResult",
    "KnFreeResult",
    "ModelError",
    "OutOfRange",
    "PSL2",
    "PrimeGraph",
    "PrimePower",
    "Product",
    "SearchResult",
    "ShapeMismatch",
    "Suzuki",
    "TooLarge",
    "UnknownVertex",
    "VerificationRecord",
    "VertexClash",
    "abelian",
    "alternating_cycle_witness",
    "as_prime_power",
    "c4_product",
    "check_n_exact",
    "classify_extremal_case",
    "complement",
    "connected_components",
    "describe_model",
    "disconnected_pair",
    "factorize",
    "find_alphas",
    "fresh_primes",
    "graph_from_degrees",
    "induced_subgraph",
    "is_bipartite",
    "is_hamiltonian",
    "is_kn_free",
    "is_prime",
    "isomorphic_small",
    "join",
    "longest_odd_cycle_at_least",
    "max_clique",
    "model_graph",
    "model_support",
    "prime_divisors",
    "psl2_degree_oracle",
    "psl2_graph",
    "suzuki_graph",
    "verify_hamilton_characterization",
    "verify_order_bound",
]
