"""Hypergraph data model and quadratic-form (energy) evaluation.

Directed hyperarcs contribute ``z * max_{u in tail, v in head} (x_u - x_v)_+^2``
to the quadratic form; undirected hyperedges contribute
``z * max_{u, v in f} (x_u - x_v)^2``.  Restricted to 0/1 indicator vectors the
directed form is the cut function.

All objects are immutable; vertex sets inside arcs/edges are stored as sorted
tuples so equality and serialization are canonical.  The arc/edge list index
is the canonical total order used everywhere ties must be broken.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

VertexId = int


def _canon_vertices(vs) -> tuple[int, ...]:
    out = tuple(sorted(set(int(v) for v in vs)))
    if not out:
        raise ValueError("vertex set must be nonempty")
    if out[0] < 0:
        raise ValueError("negative vertex id")
    return out


@dataclass(frozen=True)
class DirectedHyperarc:
    """A weighted hyperarc (tail set, head set); the sets may intersect."""

    tail: tuple[int, ...]
    head: tuple[int, ...]
    weight: float

    def __post_init__(self):
        object.__setattr__(self, "tail", _canon_vertices(self.tail))
        object.__setattr__(self, "head", _canon_vertices(self.head))
        object.__setattr__(self, "weight", float(self.weight))
        if not self.weight > 0:
            raise ValueError(f"weight must be positive, got {self.weight}")

    @property
    def size(self) -> int:
        return len(self.tail) + len(self.head)


@dataclass(frozen=True)
class UndirectedHyperedge:
    """A weighted hyperedge; size-1 edges are allowed and carry zero energy."""

    vertices: tuple[int, ...]
    weight: float

    def __post_init__(self):
        object.__setattr__(self, "vertices", _canon_vertices(self.vertices))
        object.__setattr__(self, "weight", float(self.weight))
        if not self.weight > 0:
            raise ValueError(f"weight must be positive, got {self.weight}")

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class DirectedHypergraph:
    """Vertex count plus an ordered hyperarc list.

    ``origins``/``doublings`` are optional sparsifier provenance (original arc
    index and number of times the weight was doubled); they are metadata and
    excluded from equality.
    """

    n: int
    arcs: tuple[DirectedHyperarc, ...]
    origins: tuple[int, ...] | None = field(default=None, compare=False)
    doublings: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        for f in self.arcs:
            if f.tail[-1] >= self.n or f.head[-1] >= self.n:
                raise ValueError(f"arc {f} references vertex >= n={self.n}")
        for meta in (self.origins, self.doublings):
            if meta is not None and len(meta) != len(self.arcs):
                raise ValueError("metadata length mismatch")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def weights(self) -> np.ndarray:
        return np.array([f.weight for f in self.arcs], dtype=float)


@dataclass(frozen=True)
class UndirectedHypergraph:
    """Vertex count plus an ordered hyperedge list (see DirectedHypergraph)."""

    n: int
    edges: tuple[UndirectedHyperedge, ...]
    origins: tuple[int, ...] | None = field(default=None, compare=False)
    doublings: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        for f in self.edges:
            if f.vertices[-1] >= self.n:
                raise ValueError(f"edge {f} references vertex >= n={self.n}")
        for meta in (self.origins, self.doublings):
            if meta is not None and len(meta) != len(self.edges):
                raise ValueError("metadata length mismatch")

    @property
    def m(self) -> int:
        return len(self.edges)

    def weights(self) -> np.ndarray:
        return np.array([f.weight for f in self.edges], dtype=float)


Hypergraph = DirectedHypergraph | UndirectedHypergraph


def arc(tail, head, weight) -> DirectedHyperarc:
    return DirectedHyperarc(tuple(tail), tuple(head), weight)


def edge(vertices, weight) -> UndirectedHyperedge:
    return UndirectedHyperedge(tuple(vertices), weight)


# ---------------------------------------------------------------------------
# Energies


class EnergyModel:
    """Vectorized per-arc energy evaluation.

    Member index lists are padded to rectangular arrays (padding repeats the
    first member, which never changes a max/min), so a single evaluation is a
    handful of numpy reductions.  Build once, evaluate many vectors.
    """

    def __init__(self, H: Hypergraph):
        self.n = H.n
        self.z = H.weights()
        self.directed = isinstance(H, DirectedHypergraph)
        if self.directed:
            self._tails = _pad([f.tail for f in H.arcs])
            self._heads = _pad([f.head for f in H.arcs])
        else:
            self._verts = _pad([f.vertices for f in H.edges])

    def energies(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ValueError(f"vector has shape {x.shape}, expected ({self.n},)")
        if len(self.z) == 0:
            return np.zeros(0)
        if self.directed:
            gap = x[self._tails].max(axis=1) - x[self._heads].min(axis=1)
            np.maximum(gap, 0.0, out=gap)
        else:
            vals = x[self._verts]
            gap = vals.max(axis=1) - vals.min(axis=1)
        return self.z * gap * gap

    def total(self, x) -> float:
        return float(self.energies(x).sum())

    def totals(self, X) -> np.ndarray:
        """Total energy for a batch of vectors, X of shape (batch, n)."""
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.n:
            raise ValueError(f"batch has shape {X.shape}, expected (batch, {self.n})")
        if len(self.z) == 0:
            return np.zeros(len(X))
        if self.directed:
            gap = X[:, self._tails].max(axis=2) - X[:, self._heads].min(axis=2)
            np.maximum(gap, 0.0, out=gap)
        else:
            vals = X[:, self._verts]
            gap = vals.max(axis=2) - vals.min(axis=2)
        return (self.z * gap * gap).sum(axis=1)


def _pad(groups: list[tuple[int, ...]]) -> np.ndarray:
    width = max((len(g) for g in groups), default=1)
    out = np.empty((len(groups), width), dtype=np.int64)
    for i, g in enumerate(groups):
        out[i, : len(g)] = g
        out[i, len(g) :] = g[0]
    return out


def arc_energy(f: DirectedHyperarc, x) -> float:
    """Energy of a single hyperarc: z * (max tail x - min head x)_+^2."""
    x = np.asarray(x, dtype=float)
    if f.tail[-1] >= len(x) or f.head[-1] >= len(x):
        raise ValueError("vector too short for arc")
    gap = max(x[v] for v in f.tail) - min(x[v] for v in f.head)
    return f.weight * max(gap, 0.0) ** 2


def edge_energy(f: UndirectedHyperedge, x) -> float:
    """Energy of a single hyperedge: z * (max - min over members)^2."""
    x = np.asarray(x, dtype=float)
    if f.vertices[-1] >= len(x):
        raise ValueError("vector too short for edge")
    vals = [x[v] for v in f.vertices]
    return f.weight * (max(vals) - min(vals)) ** 2


def directed_energy(H: DirectedHypergraph, x, arc_indices=None) -> float:
    """x^T L_H(x), optionally restricted to a subset of arc indices."""
    e = EnergyModel(H).energies(x)
    if arc_indices is not None:
        idx = sorted(arc_indices)
        return float(e[idx].sum()) if idx else 0.0
    return float(e.sum())


def undirected_energy(H: UndirectedHypergraph, x, edge_indices=None) -> float:
    e = EnergyModel(H).energies(x)
    if edge_indices is not None:
        idx = sorted(edge_indices)
        return float(e[idx].sum()) if idx else 0.0
    return float(e.sum())


def total_energy(H: Hypergraph, x) -> float:
    return EnergyModel(H).total(x)


def cut_value(H: DirectedHypergraph, X) -> float:
    """Weight of hyperarcs crossing X forward; the quadratic form at 1_X."""
    indicator = np.zeros(H.n)
    for v in X:
        if not 0 <= v < H.n:
            raise ValueError(f"vertex {v} out of range")
        indicator[v] = 1.0
    return directed_energy(H, indicator)


# ---------------------------------------------------------------------------
# Bicliques, cliques, rank


def biclique(f: DirectedHyperarc) -> set[tuple[int, int]]:
    """All ordered (tail, head) pairs, including (u, u) on overlap."""
    return set(itertools.product(f.tail, f.head))


def biclique_union(arcs) -> set[tuple[int, int]]:
    out: set[tuple[int, int]] = set()
    for f in arcs:
        out |= biclique(f)
    return out


def clique(f: UndirectedHyperedge) -> set[tuple[int, int]]:
    """Unordered member pairs of a hyperedge, as sorted (u, v) with u < v."""
    return set(itertools.combinations(f.vertices, 2))


def clique_union(edges) -> set[tuple[int, int]]:
    out: set[tuple[int, int]] = set()
    for f in edges:
        out |= clique(f)
    return out


def rank(H: Hypergraph) -> int:
    """Max |tail|+|head| (directed) or max |f| (undirected)."""
    if isinstance(H, DirectedHypergraph):
        if not H.arcs:
            raise ValueError("rank of an empty hypergraph is undefined")
        return max(f.size for f in H.arcs)
    if not H.edges:
        raise ValueError("rank of an empty hypergraph is undefined")
    return max(f.size for f in H.edges)
