"""Undirected hypergraph sparsification via hyperspanner bundles.

Same iterative skeleton as the directed case, but each round keeps a bundle
of disjoint hyperspanners instead of a coreset.  Also provides rank bucketing
(split by hyperedge size, sparsify per bucket at a compensated accuracy,
union) and the weakly fault-tolerant variant that pads every round's bundle
with k extra layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import UndirectedHyperedge, UndirectedHypergraph, clique, rank
from .dh import IterationRecord, SparsifyReport, log43
from .sampling import CoinStream
from .spanner import SpannerBundle, associated_graph, effective_resistance, spanner_bundle


@dataclass(frozen=True)
class UhConfig:
    c_spanner_size: float = 2.0
    c_sampling: float = 1.0
    cc: float = 4.0
    mode: str = "practical"
    lambda_override: int | None = None
    stretch: float | None = None  # graph-spanner stretch; None = ceil(log2 n)
    fault_k: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("theory", "practical"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if min(self.c_spanner_size, self.c_sampling, self.cc) <= 0:
            raise ValueError("constants must be positive")
        if self.mode == "theory" and self.lambda_override is not None:
            raise ValueError("lambda_override is a practical-mode knob")
        if self.fault_k < 0:
            raise ValueError("fault_k must be >= 0")


def uh_target_size(n: int, r: int, eps: float, mode: str) -> float:
    """Target size m*; base-2 logs, polylog dropped in practical mode."""
    base = n * r**3 / (eps * eps)
    if mode == "theory":
        return base * math.log2(max(n, 2)) ** 2
    return base


def uh_schedule(m_i: int, m_star: float, eps: float, r: int, config: UhConfig) -> tuple[float, int]:
    if m_i <= m_star:
        raise ValueError("schedule needs m_i > m_star")
    eps_i = eps / (4.0 * log43(m_i / m_star) ** 2)
    lam = math.ceil(8.0 * config.c_sampling * r**3 * math.log2(m_i) ** 2 / (eps_i * eps_i))
    if config.mode == "practical" and config.lambda_override is not None:
        lam = config.lambda_override
    return eps_i, max(lam, 1)


def _graph_stretch(H: UndirectedHypergraph, config: UhConfig) -> float:
    if config.stretch is not None:
        return config.stretch
    return max(2, math.ceil(math.log2(max(H.n, 2))))


def uh_onestep(
    H: UndirectedHypergraph, lam: int, config: UhConfig, stream: CoinStream
) -> UndirectedHypergraph:
    """Keep a bundle of lam disjoint hyperspanners, sample the rest at 1/2."""
    if lam < 1:
        raise ValueError(f"lambda must be >= 1, got {lam}")
    bundle = spanner_bundle(H, lam, k=_graph_stretch(H, config))
    return _apply_onestep(H, bundle.union(), stream)[0]


def _apply_onestep(
    H: UndirectedHypergraph, kept: set[int], stream: CoinStream
) -> tuple[UndirectedHypergraph, int]:
    origins = H.origins if H.origins is not None else tuple(range(H.m))
    doublings = H.doublings if H.doublings is not None else (0,) * H.m
    edges: list[UndirectedHyperedge] = []
    new_origins: list[int] = []
    new_doublings: list[int] = []
    sampled = 0
    for idx, f in enumerate(H.edges):
        if idx in kept:
            edges.append(f)
            new_origins.append(origins[idx])
            new_doublings.append(doublings[idx])
        elif stream.keep(origins[idx]):
            edges.append(UndirectedHyperedge(f.vertices, 2.0 * f.weight))
            new_origins.append(origins[idx])
            new_doublings.append(doublings[idx] + 1)
            sampled += 1
    out = UndirectedHypergraph(
        H.n, tuple(edges), origins=tuple(new_origins), doublings=tuple(new_doublings)
    )
    return out, sampled


def _check_size_band(H: UndirectedHypergraph, r: int) -> None:
    for f in H.edges:
        if not r / 2 < f.size <= r:
            raise ValueError(
                f"hyperedge size {f.size} outside the band ({r / 2}, {r}]"
            )


def uh_sparsify(
    H: UndirectedHypergraph, eps: float, config: UhConfig, extra_layers: int = 0
) -> tuple[UndirectedHypergraph, SparsifyReport]:
    """Iterative sparsifier; requires every |f| in (r/2, r] for r = rank(H)."""
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    r = rank(H) if H.m else 1
    _check_size_band(H, r)
    m_star = uh_target_size(H.n, r, eps, config.mode)
    T = math.ceil(log43(H.m / m_star)) if H.m > m_star else 0
    report = SparsifyReport(m_star=m_star, T=T)
    cur = UndirectedHypergraph(
        H.n, H.edges, origins=tuple(range(H.m)), doublings=(0,) * H.m
    )
    if T <= 0:
        return cur, report
    stretch = _graph_stretch(H, config)
    i = 0
    while i < T and cur.m >= config.cc * m_star:
        eps_i, lam = uh_schedule(cur.m, m_star, eps, r, config)
        bundle = spanner_bundle(cur, lam + extra_layers, k=stretch)
        kept = bundle.union()
        nxt, sampled = _apply_onestep(cur, kept, CoinStream(config.seed, i))
        report.iterations.append(IterationRecord(cur.m, eps_i, lam, len(kept), sampled))
        cur = nxt
        i += 1
    report.i_end = i
    return cur, report


def ft_uh_sparsify(
    H: UndirectedHypergraph, eps: float, k: int, config: UhConfig
) -> tuple[UndirectedHypergraph, SparsifyReport]:
    """Weakly k-fault-tolerant variant: k extra bundle layers per round."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return uh_sparsify(H, eps, config, extra_layers=k)


def rank_buckets(H: UndirectedHypergraph, r: int) -> dict[int, list[int]]:
    """Bucket i holds the hyperedges of size in (2^(i-1), 2^i]."""
    buckets: dict[int, list[int]] = {}
    for idx, f in enumerate(H.edges):
        if f.size > r:
            raise ValueError(f"hyperedge size {f.size} exceeds rank bound {r}")
        i = max(1, math.ceil(math.log2(f.size)))
        buckets.setdefault(i, []).append(idx)
    return buckets


def rank_bucket_sparsify(
    H: UndirectedHypergraph, eps: float, config: UhConfig, r: int | None = None
) -> tuple[UndirectedHypergraph, dict[int, SparsifyReport]]:
    """Split by size bucket, sparsify bucket i at eps*sqrt(2^(i-1)/r), union."""
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    if r is None:
        r = rank(H) if H.m else 1
    buckets = rank_buckets(H, r)
    out_edges: list[UndirectedHyperedge] = []
    out_origins: list[int] = []
    out_doublings: list[int] = []
    reports: dict[int, SparsifyReport] = {}
    for i in sorted(buckets):
        idxs = buckets[i]
        sub = UndirectedHypergraph(H.n, tuple(H.edges[j] for j in idxs))
        eps_i = min(eps * math.sqrt(2 ** (i - 1) / r), eps)
        sub_out, report = uh_sparsify(sub, eps_i, config)
        reports[i] = report
        assert sub_out.origins is not None and sub_out.doublings is not None
        out_edges.extend(sub_out.edges)
        out_origins.extend(idxs[j] for j in sub_out.origins)
        out_doublings.extend(sub_out.doublings)
    out = UndirectedHypergraph(
        H.n, tuple(out_edges), origins=tuple(out_origins), doublings=tuple(out_doublings)
    )
    return out, reports


# ---------------------------------------------------------------------------
# Resistance diagnostics


def bundle_resistance_bound(
    H: UndirectedHypergraph, bundle: SpannerBundle, r: int
) -> tuple[float, float]:
    """(worst z_f * R_G(u, v) outside the bundle, its bound 4k/(r*lambda)).

    R is measured on the associated clique graph; k is the bundle's achieved
    stretch and lambda its layer count.  Requires all |f| in (r/2, r].
    """
    _check_size_band(H, r)
    lam = len(bundle.layers)
    bound = 4.0 * bundle.stretch / (r * lam)
    G = associated_graph(H)
    kept = bundle.union()
    worst = 0.0
    cache: dict[tuple[int, int], float] = {}
    for idx, f in enumerate(H.edges):
        if idx in kept:
            continue
        for u, v in clique(f):
            if (u, v) not in cache:
                cache[(u, v)] = effective_resistance(G, u, v)
            worst = max(worst, f.weight * cache[(u, v)])
    return worst, bound


def sampling_probability_sound(
    H: UndirectedHypergraph,
    bundle: SpannerBundle,
    eps: float,
    r: int,
    c_sampling: float,
) -> tuple[bool, float]:
    """Check the per-edge 1/2-sampling precondition against measured resistances.

    Passes when every non-bundle f and member pair satisfies
    (C * r^4 * log2 n / eps^2) * z_f * R_G(u, v) <= 1/2.
    """
    worst, _ = bundle_resistance_bound(H, bundle, r)
    factor = c_sampling * r**4 * math.log2(max(H.n, 2)) / (eps * eps)
    value = factor * worst
    return value <= 0.5, value


def mean_edge_weight(H: UndirectedHypergraph) -> float:
    return float(np.mean(H.weights())) if H.m else 0.0
