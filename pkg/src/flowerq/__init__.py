"""Signless Laplacian spectral extremal problems for intersecting odd cycles.

Graph families, the spectral radius ``q(G)`` of ``D + A`` and its bounds,
flower (intersecting odd cycles) detection, extremal search over graph
streams, and runnable checks of the supporting lemmas.
"""

__version__ = "0.1.0"

from .graph import (
    CapacityError,
    FlowerSpec,
    Graph,
    Graph6Error,
    GraphError,
    complete,
    complete_bipartite,
    cone,
    cycle,
    disjoint_copies,
    efgg_extremal,
    empty,
    flower,
    friendship,
    from_graph6,
    hks_extremal,
    join,
    path,
    split_graph,
    star,
    to_graph6,
    union,
    windmill,
)
from .spectral import (
    BoundReport,
    ConvergenceError,
    SpectralResult,
    bound_report,
    das_bound,
    lemma24_edge_threshold,
    lemma24_lower_bound,
    merris_bound,
    q_radius,
    q_split_closed_form,
    q_two_dominant_closed_form,
)
from .subgraph import (
    BudgetExceeded,
    CapabilityError,
    FlowerWitness,
    circumference,
    contains_disjoint_paths,
    contains_flower,
    find_flower,
    longest_path_order,
    peel_min_degree,
    split_containment,
)
from .search import (
    ExtremalRecord,
    enumerate_labeled,
    ingest_stream,
    randomized_challenge,
    spectral_extremal_search,
    turan_search,
)
