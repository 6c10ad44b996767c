"""Spectral sparsification of directed and undirected hypergraphs."""

from .core import (
    DirectedHyperarc,
    DirectedHypergraph,
    EnergyModel,
    UndirectedHyperedge,
    UndirectedHypergraph,
    arc,
    arc_energy,
    biclique,
    biclique_union,
    clique,
    clique_union,
    cut_value,
    directed_energy,
    edge,
    edge_energy,
    rank,
    total_energy,
    undirected_energy,
)
from .coreset import Coreset, CoresetCheck, coreset_finder, verify_coreset
from .dh import (
    SparsifyConfig,
    SparsifyReport,
    critical_pair,
    dh_onestep,
    dh_sparsify,
    dh_target_size,
    energy_partition,
    schedule,
)
from .hgio import ParseError, dump, load, parse, write
from .instances import (
    LowerBoundParams,
    gen_lower_bound,
    gen_random_directed,
    gen_random_undirected,
    lower_bound_witness,
)
from .sampling import CoinStream, coin, probe_rng
from .spanner import (
    GraphEdge,
    SpannerBundle,
    WeightedMultigraph,
    associated_graph,
    effective_resistance,
    greedy_spanner,
    hyperspanner,
    spanner_bundle,
    star_graph,
)
from .uh import (
    UhConfig,
    ft_uh_sparsify,
    rank_bucket_sparsify,
    uh_onestep,
    uh_sparsify,
    uh_target_size,
)
from .verify import (
    exhaustive_cut_check,
    hyper_stretch_check,
    spectral_probe,
    stretch_check,
)

__version__ = "1.0.0"
