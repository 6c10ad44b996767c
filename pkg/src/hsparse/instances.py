"""Instance generators and the unsparsifiability witness.

The lower-bound family lives on 2n vertices split into U = [0, n) and
W = [n, 2n).  For every i in U, offset d in 1..q, and k in W there is a
rank-3 arc ({i, (i+d) mod n}, {k}) of weight 4*eps, where q = 1/(8*eps).
Every ordered pair (i, k) in U x W is then covered by exactly 2q = 1/(4*eps)
arcs, and no proper sub-hypergraph can be an eps-spectral (or even cut)
sparsifier: the witness exhibits three 0/1 vectors whose quadratic forms
cannot simultaneously satisfy the sparsifier window.

Random generators are plumbing for the test harness; they are pure functions
of their parameters and seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    DirectedHyperarc,
    DirectedHypergraph,
    EnergyModel,
    UndirectedHyperedge,
    UndirectedHypergraph,
    arc,
    edge,
)


@dataclass(frozen=True)
class LowerBoundParams:
    """n and eps with 1/(8*eps) a positive integer and 1/(4*eps) < n.

    eps is kept as an exact Fraction so the integrality conditions are checked
    without floating-point drift; floats are converted via their exact binary
    value, so pass Fraction(1, 24) rather than 1/24 for non-dyadic choices.
    """

    n: int
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 < self.eps < 1:
            raise ValueError(f"eps must be in (0, 1), got {self.eps}")
        if (1 / (8 * self.eps)).denominator != 1:
            raise ValueError(f"1/(8*eps) must be an integer, got eps={self.eps}")
        if not 1 / (4 * self.eps) < self.n:
            raise ValueError(f"need 1/(4*eps) < n, got eps={self.eps}, n={self.n}")

    @property
    def q(self) -> int:
        return int(1 / (8 * self.eps))


def gen_lower_bound(params: LowerBoundParams) -> DirectedHypergraph:
    """The unsparsifiable family: n^2 * q arcs on 2n vertices."""
    n, q = params.n, params.q
    weight = float(4 * params.eps)
    arcs = []
    for i in range(n):
        for d in range(1, q + 1):
            j = (i + d) % n
            for k in range(n, 2 * n):
                arcs.append(DirectedHyperarc((i, j), (k,), weight))
    return DirectedHypergraph(2 * n, tuple(arcs))


@dataclass(frozen=True)
class WitnessReport:
    violation: bool
    lower_required: float
    upper_allowed: float
    q1: float
    qs: float
    q1s: float
    additive: bool
    removed_arc: int | None


def lower_bound_witness(
    H: DirectedHypergraph, eps, removed_arc: int | None
) -> WitnessReport:
    """Evaluate the three witness vectors against a single-arc removal.

    The removed arc ({a, b}, {c}) determines the vectors directly: x1 is 1 at
    a and 0 elsewhere in U, 0 at c and 1 elsewhere in W; xs swaps a for b;
    x1s is their elementwise max.  On the sub-hypergraph the forms at x1 and
    xs add up to the form at x1s exactly (the removed arc was the only one
    covering both (a, c) and (b, c)), while any eps-sparsifier needs their sum
    at least 2(1 - eps) yet allows x1s at most 2(1 - eps - 2 eps^2).  The
    window is empty, so the removal is always a violation.
    """
    eps = Fraction(eps)
    n2 = H.n
    if n2 % 2:
        raise ValueError("lower-bound instances have an even vertex count")
    n = n2 // 2
    lower = float(2 * (1 - eps))
    upper = float(2 * (1 - eps - 2 * eps**2))
    if removed_arc is None:
        return WitnessReport(False, lower, upper, 1.0, 1.0, float(2 * (1 - 2 * eps)),
                             additive=False, removed_arc=None)
    if not 0 <= removed_arc < H.m:
        raise ValueError(f"removed arc {removed_arc} not in H")
    f = H.arcs[removed_arc]
    if len(f.tail) != 2 or len(f.head) != 1:
        raise ValueError(f"arc {removed_arc} does not have the family's shape")
    a, b = f.tail
    (c,) = f.head

    x1 = np.zeros(n2)
    x1[n:] = 1.0
    x1[a] = 1.0
    x1[c] = 0.0
    xs = x1.copy()
    xs[a], xs[b] = 0.0, 1.0
    x1s = np.maximum(x1, xs)

    sub = DirectedHypergraph(
        H.n, tuple(g for i, g in enumerate(H.arcs) if i != removed_arc)
    )
    model = EnergyModel(sub)
    q1 = model.total(x1)
    qs = model.total(xs)
    q1s = model.total(x1s)
    additive = abs((q1 + qs) - q1s) <= 1e-12 * max(1.0, q1s)
    violation = additive and lower > upper
    return WitnessReport(violation, lower, upper, q1, qs, q1s, additive, removed_arc)


# ---------------------------------------------------------------------------
# Random generators


def _check_weight_range(weight_range) -> tuple[float, float]:
    lo, hi = float(weight_range[0]), float(weight_range[1])
    if not 0 < lo <= hi:
        raise ValueError(f"bad weight range ({lo}, {hi})")
    return lo, hi


def _log_uniform(rng: np.random.Generator, lo: float, hi: float) -> float:
    if lo == hi:
        return lo
    return float(np.exp(rng.uniform(np.log(lo), np.log(hi))))


def gen_random_directed(
    n: int, m: int, r: int, weight_range=(1.0, 1.0), seed: int = 0
) -> DirectedHypergraph:
    """m random arcs with |t| + |h| <= r, both sides nonempty and disjoint-sampled."""
    if r < 2:
        raise ValueError(f"rank bound must be >= 2, got {r}")
    if n < 1 or m < 0:
        raise ValueError("n must be positive and m nonnegative")
    lo, hi = _check_weight_range(weight_range)
    rng = np.random.default_rng(seed)
    arcs = []
    max_side = min(r - 1, n)
    for _ in range(m):
        t_size = int(rng.integers(1, max_side + 1))
        h_size = int(rng.integers(1, min(r - t_size, n) + 1))
        tail = rng.choice(n, size=t_size, replace=False)
        head = rng.choice(n, size=h_size, replace=False)
        arcs.append(arc(tail, head, _log_uniform(rng, lo, hi)))
    return DirectedHypergraph(n, tuple(arcs))


def gen_random_undirected(
    n: int, m: int, r: int, weight_range=(1.0, 1.0), seed: int = 0
) -> UndirectedHypergraph:
    """m random hyperedges with sizes uniform in the band (r/2, r]."""
    if r < 2:
        raise ValueError(f"rank bound must be >= 2, got {r}")
    if r > n:
        raise ValueError(f"need r <= n to sample without replacement, got r={r}, n={n}")
    if n < 1 or m < 0:
        raise ValueError("n must be positive and m nonnegative")
    lo, hi = _check_weight_range(weight_range)
    low_size = r // 2 + 1
    rng = np.random.default_rng(seed)
    edges = []
    for _ in range(m):
        size = int(rng.integers(low_size, r + 1))
        verts = rng.choice(n, size=size, replace=False)
        edges.append(edge(verts, _log_uniform(rng, lo, hi)))
    return UndirectedHypergraph(n, tuple(edges))
