"""Sparsifier-quality oracles.

Randomized probing estimates the spectral error sup |Q~(x)/Q(x) - 1| from
below by sampling vectors (Gaussian by default, optionally 0/1); the
exhaustive checker settles the cut version exactly for small n.  Stretch
checkers validate spanners edge by edge and hyperspanners pair by pair via
shortest hyperpaths on the vertex-hyperedge incidence expansion.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DirectedHypergraph,
    EnergyModel,
    UndirectedHypergraph,
    clique,
)
from .sampling import probe_rng
from .spanner import WeightedMultigraph, _dijkstra_within

RATIO_SLACK = 1e-12  # absorbs summation-order noise in ratio comparisons


@dataclass
class ProbeResult:
    max_over: float
    max_under: float
    degenerate: int
    trace: list[tuple[float, float]] = field(default_factory=list)  # (Q, Q~) per probe

    @property
    def max_error(self) -> float:
        return max(self.max_over, self.max_under)


def spectral_probe(
    H,
    H_tilde,
    num_samples: int,
    seed: int = 0,
    mode: str = "gaussian",
) -> ProbeResult:
    """Lower-bound the spectral error by random probing.

    Probe j draws from the nested sub-seed (seed, j), so growing num_samples
    extends the probe sequence instead of reshuffling it and the maxima are
    monotone in num_samples.  Probes with Q_H(x) = 0 are skipped and counted.
    """
    if H.n != H_tilde.n:
        raise ValueError("vertex counts differ")
    if mode not in ("gaussian", "boolean"):
        raise ValueError(f"unknown probe mode {mode!r}")
    model = EnergyModel(H)
    model_t = EnergyModel(H_tilde)
    max_over = 0.0
    max_under = 0.0
    degenerate = 0
    trace: list[tuple[float, float]] = []
    chunk = 64  # batch evaluation; results identical to one probe at a time
    for start in range(0, num_samples, chunk):
        stop = min(start + chunk, num_samples)
        X = np.empty((stop - start, H.n))
        for j in range(start, stop):
            rng = probe_rng(seed, j)
            if mode == "gaussian":
                X[j - start] = rng.standard_normal(H.n)
            else:
                X[j - start] = rng.integers(0, 2, size=H.n)
        qs = model.totals(X)
        qts = model_t.totals(X)
        for q, qt in zip(qs, qts):
            trace.append((float(q), float(qt)))
            if q <= 0:
                degenerate += 1
                continue
            ratio = qt / q
            max_over = max(max_over, ratio - 1.0)
            max_under = max(max_under, 1.0 - ratio)
    if degenerate == num_samples and num_samples > 0:
        raise ValueError("all probes degenerate (zero energy in H)")
    return ProbeResult(max_over, max_under, degenerate, trace)


@dataclass
class CutCheckResult:
    ok: bool
    worst_x: tuple[int, ...] | None
    worst_ratio_gap: float


def exhaustive_cut_check(
    H: DirectedHypergraph, H_tilde: DirectedHypergraph, eps: float, cap: int = 16
) -> CutCheckResult:
    """Scan all 2^n indicator vectors; pass iff every cut sits in the window."""
    if H.n != H_tilde.n:
        raise ValueError("vertex counts differ")
    if H.n > cap:
        raise ValueError(f"n={H.n} exceeds the exhaustive cap {cap}")
    model = EnergyModel(H)
    model_t = EnergyModel(H_tilde)
    worst_x = None
    worst_gap = 0.0
    x = np.zeros(H.n)
    for bits in itertools.product((0.0, 1.0), repeat=H.n):
        x[:] = bits
        q = model.total(x)
        qt = model_t.total(x)
        lo = (1.0 - eps) * q - RATIO_SLACK
        hi = (1.0 + eps) * q + RATIO_SLACK
        gap = max(lo - qt, qt - hi)
        if gap > worst_gap:
            worst_gap = gap
            worst_x = tuple(int(b) for b in bits)
    return CutCheckResult(ok=worst_x is None, worst_x=worst_x, worst_ratio_gap=worst_gap)


# ---------------------------------------------------------------------------
# Stretch checkers


@dataclass
class StretchResult:
    ok: bool
    worst: tuple | None  # (edge or (hyperedge, pair), measured, allowed)


def stretch_check(G: WeightedMultigraph, spanner_edges, k: float) -> StretchResult:
    """Every input edge must have a spanner path within k times its length."""
    picked = set(spanner_edges)
    adj: dict[int, list[tuple[int, float]]] = {}
    for i in picked:
        e = G.edges[i]
        adj.setdefault(e.u, []).append((e.v, e.length))
        adj.setdefault(e.v, []).append((e.u, e.length))
    worst = None
    worst_excess = 0.0
    for i, e in enumerate(G.edges):
        budget = k * e.length
        d = _dijkstra_within(adj, e.u, e.v, budget * (1.0 + RATIO_SLACK))
        excess = d - budget * (1.0 + RATIO_SLACK)
        if excess > worst_excess:
            worst_excess = excess
            worst = (i, d, budget)
    return StretchResult(ok=worst is None, worst=worst)


def _hyperpath_dist(
    H: UndirectedHypergraph, allowed: set[int], source: int, target: int, cutoff: float
) -> float:
    """Shortest u-v hyperpath length over allowed hyperedges, cost 1/z each.

    Run on the bipartite incidence expansion: vertex nodes are free to enter,
    hyperedge nodes charge 1/z on traversal.
    """
    incident: dict[int, list[int]] = {}
    for idx in allowed:
        for v in H.edges[idx].vertices:
            incident.setdefault(v, []).append(idx)
    dist: dict[int, float] = {source: 0.0}
    heap = [(0.0, source)]
    used: set[int] = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v == target:
            return d
        if d > dist.get(v, math.inf) or d > cutoff:
            continue
        for idx in incident.get(v, ()):
            if idx in used:
                continue
            used.add(idx)
            f = H.edges[idx]
            nd = d + 1.0 / f.weight
            if nd > cutoff:
                continue
            for w in f.vertices:
                if nd < dist.get(w, math.inf):
                    dist[w] = nd
                    heapq.heappush(heap, (nd, w))
    return dist.get(target, math.inf)


def hyper_stretch_check(
    H: UndirectedHypergraph, hyperspanner_edges, k: float
) -> StretchResult:
    """Every hyperedge pair must have a spanner hyperpath within k/z_f."""
    allowed = set(hyperspanner_edges)
    worst = None
    worst_excess = 0.0
    for idx, f in enumerate(H.edges):
        budget = k / f.weight
        for u, v in sorted(clique(f)):
            d = _hyperpath_dist(H, allowed, u, v, budget * (1.0 + RATIO_SLACK))
            excess = d - budget * (1.0 + RATIO_SLACK)
            if excess > worst_excess:
                worst_excess = excess
                worst = ((idx, (u, v)), d, budget)
    return StretchResult(ok=worst is None, worst=worst)
