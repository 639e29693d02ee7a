"""Fractional coloring certificates for triangle-free graphs.

Computes minimum-slack probability distributions over independent sets and
exact fractional chromatic numbers by column generation, and certifies the
local degree bound, its weighted generalization, the spectral-radius bound,
and the edge-count mixture bound on concrete graphs.
"""

__version__ = "0.1.0"

from .certify import (
    Certificate,
    bound_report,
    dcore_reduction_check,
    edge_bound_mixture,
    neighborhood_sampler,
    verify_local_shearer,
    verify_spectral_bound,
    verify_weighted_theorem,
    weighted_targets,
)
from .dynamics import (
    MixReport,
    claim_check,
    lp_witness_inputs,
    mix_process,
    taylor_bound_check,
    tilt_weights,
)
from .errors import (
    Disconnected,
    DomainError,
    GraphError,
    InvalidSpec,
    IsolatedVertex,
    NotConverged,
    NotNormalized,
    NotTriangleFree,
    OutOfRange,
    ParseError,
    PricingBudgetExceeded,
    SelfLoop,
    ShearerError,
    SupportNotIndependent,
    TooLarge,
)
from .generators import (
    complete_bipartite,
    cycle,
    generate,
    grotzsch,
    kneser,
    mycielski,
    petersen,
    random_bipartite,
    star,
    triangle_free_process,
)
from .graph import (
    Graph,
    GraphStats,
    build_graph,
    components,
    d_core,
    graph_hash,
    induced_subgraph,
    is_connected,
    is_triangle_free,
    peel_order,
    remove_closed_neighborhood,
    stats,
)
from .graphio import parse_graph_file, parse_graph_text, write_edge_list
from .indsets import (
    IndepSet,
    enumerate_all_independent_sets,
    enumerate_maximal_independent_sets,
    is_independent,
    max_weight_independent_set,
)
from .lp import (
    ChiFractional,
    Distribution,
    LPResult,
    chi_fractional,
    expected_size,
    lift_distribution,
    make_distribution,
    marginals,
    solve_min_slack,
)
from .shearer_fn import f_rational_floor, ode_residual, shearer_f, shearer_f_prime
from .spectral import SpectralResult, spectral_of, spectral_radius
from .weights import WeightFn, degree_weights, random_rational_weights, random_weights, unit_weights
