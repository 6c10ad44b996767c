"""Weighted multigraphs, spanners, hyperspanner bundles, effective resistance.

Edge length is the reciprocal weight 1/w.  A k-spanner keeps, for every input
edge, an alternative path at most k times the edge's own length.  Hyperspanners
are obtained by running the graph spanner on a replacement graph of the
hypergraph: the star graph (fast; costs a factor 2 in achieved stretch) or the
full associated clique graph.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import UndirectedHypergraph


@dataclass(frozen=True)
class GraphEdge:
    u: int
    v: int
    weight: float
    origin: int | None = None  # hyperedge index this edge came from

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("self-loops are not stored")
        if not self.weight > 0:
            raise ValueError("weight must be positive")

    @property
    def length(self) -> float:
        return 1.0 / self.weight


@dataclass(frozen=True)
class WeightedMultigraph:
    n: int
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        for e in self.edges:
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError("edge endpoint out of range")

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass
class SpannerBundle:
    """Disjoint hyperspanner layers; stretch is the achieved hyperpath stretch."""

    layers: list[set[int]]
    stretch: float

    def union(self) -> set[int]:
        out: set[int] = set()
        for layer in self.layers:
            out |= layer
        return out


def default_stretch(n: int) -> int:
    return max(2, math.ceil(math.log2(max(n, 2))))


def associated_graph(H: UndirectedHypergraph) -> WeightedMultigraph:
    """Replace every hyperedge by a clique on its members, weights inherited."""
    edges = []
    for idx, f in enumerate(H.edges):
        for u, v in itertools.combinations(f.vertices, 2):
            edges.append(GraphEdge(u, v, f.weight, origin=idx))
    return WeightedMultigraph(H.n, tuple(edges))


def star_graph(H: UndirectedHypergraph) -> WeightedMultigraph:
    """Replace every hyperedge by a star from its lowest-index member."""
    edges = []
    for idx, f in enumerate(H.edges):
        center = f.vertices[0]
        for v in f.vertices[1:]:
            edges.append(GraphEdge(center, v, f.weight, origin=idx))
    return WeightedMultigraph(H.n, tuple(edges))


# ---------------------------------------------------------------------------
# Spanners


def _dijkstra_within(adj, source: int, target: int, cutoff: float) -> float:
    """Shortest source-target distance, abandoning paths longer than cutoff."""
    dist = {source: 0.0}
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if v == target:
            return d
        if d > dist.get(v, math.inf) or d > cutoff:
            continue
        for w, length in adj.get(v, ()):
            nd = d + length
            if nd <= cutoff and nd < dist.get(w, math.inf):
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return dist.get(target, math.inf)


def greedy_spanner(G: WeightedMultigraph, k: float) -> list[int]:
    """Edge indices of a k-spanner, grown greedily in increasing length.

    An edge joins the spanner iff the spanner built so far offers no u-v path
    of length at most k times the edge's own length; skipped edges therefore
    satisfy the stretch bound at skip time, and it only improves afterwards.
    """
    if k < 1:
        raise ValueError(f"stretch must be >= 1, got {k}")
    order = sorted(range(G.m), key=lambda i: (G.edges[i].length, i))
    adj: dict[int, list[tuple[int, float]]] = {}
    chosen: list[int] = []
    for idx in order:
        e = G.edges[idx]
        budget = k * e.length
        if _dijkstra_within(adj, e.u, e.v, budget) > budget:
            chosen.append(idx)
            adj.setdefault(e.u, []).append((e.v, e.length))
            adj.setdefault(e.v, []).append((e.u, e.length))
    return sorted(chosen)


def hyperspanner(H: UndirectedHypergraph, k: float, use_star: bool = True) -> set[int]:
    """Hyperedge indices backing a graph spanner of a replacement graph.

    With the star replacement (default) the result is a 2k-hyperspanner; with
    the clique replacement it is a k-hyperspanner.
    """
    G = star_graph(H) if use_star else associated_graph(H)
    picked = greedy_spanner(G, k)
    return {G.edges[i].origin for i in picked}


def spanner_bundle(
    H: UndirectedHypergraph,
    lam: int,
    k: float | None = None,
    use_star: bool = True,
    prune: bool = False,
    c3: float = 2.0,
) -> SpannerBundle:
    """lam disjoint hyperspanner layers, each built on the remaining edges.

    With prune=True, each parallel class of the replacement graph is first cut
    down to its ceil(lam*c3*n) heaviest edges; a spanner layer uses at most
    one edge per parallel class and always the heaviest available, so the
    layers are unchanged.
    """
    if lam < 1:
        raise ValueError(f"lambda must be >= 1, got {lam}")
    if k is None:
        k = default_stretch(H.n)
    build = star_graph if use_star else associated_graph

    allowed: set[tuple[int, int, int]] | None = None
    if prune:
        keep = math.ceil(lam * c3 * H.n)
        G0 = build(H)
        classes: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(G0.edges):
            classes.setdefault((min(e.u, e.v), max(e.u, e.v)), []).append(i)
        allowed = set()
        for pair, idxs in classes.items():
            idxs.sort(key=lambda i: (-G0.edges[i].weight, i))
            for i in idxs[:keep]:
                allowed.add((*pair, G0.edges[i].origin))

    remaining = list(range(H.m))
    layers: list[set[int]] = []
    for _ in range(lam):
        if not remaining:
            break
        sub = UndirectedHypergraph(H.n, tuple(H.edges[i] for i in remaining))
        G = build(sub)
        edges = G.edges
        if allowed is not None:
            keep_idx = [
                i
                for i, e in enumerate(edges)
                if (min(e.u, e.v), max(e.u, e.v), remaining[e.origin]) in allowed
            ]
            G = WeightedMultigraph(H.n, tuple(edges[i] for i in keep_idx))
        picked = greedy_spanner(G, k)
        layer = {remaining[G.edges[i].origin] for i in picked}
        layers.append(layer)
        remaining = [i for i in remaining if i not in layer]
    achieved = 2.0 * k if use_star else float(k)
    return SpannerBundle(layers=layers, stretch=achieved)


# ---------------------------------------------------------------------------
# Effective resistance


def _component(G: WeightedMultigraph, source: int) -> set[int]:
    adj: dict[int, set[int]] = {}
    for e in G.edges:
        adj.setdefault(e.u, set()).add(e.v)
        adj.setdefault(e.v, set()).add(e.u)
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def effective_resistance(G: WeightedMultigraph, u: int, v: int) -> float:
    """Two-point resistance with 1/w per edge; inf when u, v are disconnected.

    Solved as a grounded Laplacian system on u's connected component (dense;
    instances here are desk scale).
    """
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError("vertex out of range")
    if u == v:
        return 0.0
    comp = _component(G, u)
    if v not in comp:
        return math.inf
    nodes = sorted(comp)
    pos = {w: i for i, w in enumerate(nodes)}
    L = np.zeros((len(nodes), len(nodes)))
    for e in G.edges:
        if e.u in comp and e.v in comp:
            a, b = pos[e.u], pos[e.v]
            L[a, a] += e.weight
            L[b, b] += e.weight
            L[a, b] -= e.weight
            L[b, a] -= e.weight
    b_vec = np.zeros(len(nodes))
    b_vec[pos[u]] = 1.0
    b_vec[pos[v]] = -1.0
    # ground u: drop its row/column, potentials relative to phi_u = 0
    keep = [i for i in range(len(nodes)) if i != pos[u]]
    reduced = L[np.ix_(keep, keep)]
    rhs = b_vec[keep]
    phi = np.linalg.solve(reduced, rhs)
    residual = np.linalg.norm(reduced @ phi - rhs)
    if residual > 1e-9 * max(1.0, np.linalg.norm(rhs)):
        phi = np.linalg.lstsq(reduced, rhs, rcond=None)[0]
    full = np.zeros(len(nodes))
    full[keep] = phi
    return float(full[pos[u]] - full[pos[v]])
