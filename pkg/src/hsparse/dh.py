"""Directed hypergraph sparsification: one-step sampler and iterative driver.

One step keeps a lambda-coreset at original weight and flips a fair keyed coin
for every other arc, doubling the weight of survivors.  The driver repeats
this with a per-round accuracy/coreset schedule until the arc count falls
under a target size.  Energy-class partitioning and critical pairs are
runtime diagnostics for the bound |E_i^x| < 2^i that underlies the one-step
guarantee.

Modes: "theory" follows the schedule literally, including the polylog factor
in the target size, which makes desk-scale inputs a no-op (they are already
below target).  "practical" drops the polylog factor from the target and
allows a fixed lambda override so the sampling path actually runs at desk
scale and its error can be measured.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import DirectedHyperarc, DirectedHypergraph, EnergyModel
from .coreset import Coreset, coreset_finder
from .sampling import CoinStream

LOG43 = math.log(4.0 / 3.0)


def log43(x: float) -> float:
    return math.log(x) / LOG43


@dataclass(frozen=True)
class SparsifyConfig:
    ca: float = 1.0
    cc: float = 4.0
    mode: str = "practical"
    lambda_override: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("theory", "practical"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.ca <= 0 or self.cc <= 0:
            raise ValueError("constants must be positive")
        if self.mode == "theory" and self.lambda_override is not None:
            raise ValueError("lambda_override is a practical-mode knob")
        if self.lambda_override is not None and self.lambda_override < 1:
            raise ValueError("lambda_override must be >= 1")


@dataclass
class IterationRecord:
    m_before: int
    eps_i: float
    lambda_i: int
    coreset_size: int
    sampled_count: int

    @property
    def m_after(self) -> int:
        return self.coreset_size + self.sampled_count


@dataclass
class SparsifyReport:
    iterations: list[IterationRecord] = field(default_factory=list)
    i_end: int = 0
    m_star: float = 0.0
    T: int = 0

    def check(self) -> None:
        for rec in self.iterations:
            if rec.m_after > rec.m_before:
                raise AssertionError("iteration increased the arc count")
        if self.i_end > max(self.T, 0):
            raise AssertionError("i_end exceeds T")


def dh_target_size(n: int, eps: float, mode: str) -> float:
    """Target sparsifier size m*; base-2 logs, polylog dropped in practical."""
    base = n * n / (eps * eps)
    if mode == "theory":
        return base * math.log2(n / eps) ** 3
    return base


def schedule(m_i: int, m_star: float, eps: float, config: SparsifyConfig) -> tuple[float, int]:
    """Per-round accuracy eps_i and coreset parameter lambda_i."""
    if m_i <= m_star:
        raise ValueError("schedule needs m_i > m_star")
    eps_i = eps / (4.0 * log43(m_i / m_star) ** 2)
    lam = math.ceil(config.ca * math.log2(m_i) ** 3 / (eps_i * eps_i))
    if config.mode == "practical" and config.lambda_override is not None:
        lam = config.lambda_override
    return eps_i, max(lam, 1)


def dh_onestep(H: DirectedHypergraph, lam: int, stream: CoinStream) -> DirectedHypergraph:
    """Keep a lambda-coreset, sample the rest at 1/2 with doubled weight."""
    coreset = coreset_finder(H, lam)
    return _apply_onestep(H, coreset.selected, stream)[0]


def _apply_onestep(
    H: DirectedHypergraph, kept: set[int], stream: CoinStream
) -> tuple[DirectedHypergraph, int]:
    origins = H.origins if H.origins is not None else tuple(range(H.m))
    doublings = H.doublings if H.doublings is not None else (0,) * H.m
    arcs: list[DirectedHyperarc] = []
    new_origins: list[int] = []
    new_doublings: list[int] = []
    sampled = 0
    for idx, f in enumerate(H.arcs):
        if idx in kept:
            arcs.append(f)
            new_origins.append(origins[idx])
            new_doublings.append(doublings[idx])
        elif stream.keep(origins[idx]):
            arcs.append(DirectedHyperarc(f.tail, f.head, 2.0 * f.weight))
            new_origins.append(origins[idx])
            new_doublings.append(doublings[idx] + 1)
            sampled += 1
    out = DirectedHypergraph(
        H.n, tuple(arcs), origins=tuple(new_origins), doublings=tuple(new_doublings)
    )
    return out, sampled


def dh_sparsify(
    H: DirectedHypergraph, eps: float, config: SparsifyConfig
) -> tuple[DirectedHypergraph, SparsifyReport]:
    """Iterative sparsifier; returns the output and the per-round trace."""
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0, 1), got {eps}")
    m_star = dh_target_size(H.n, eps, config.mode)
    T = math.ceil(log43(H.m / m_star)) if H.m > m_star else 0
    report = SparsifyReport(m_star=m_star, T=T)
    cur = DirectedHypergraph(
        H.n, H.arcs, origins=tuple(range(H.m)), doublings=(0,) * H.m
    )
    if T <= 0:
        return cur, report
    i = 0
    while i < T and cur.m >= config.cc * m_star:
        eps_i, lam = schedule(cur.m, m_star, eps, config)
        coreset = coreset_finder(cur, lam)
        nxt, sampled = _apply_onestep(cur, coreset.selected, CoinStream(config.seed, i))
        report.iterations.append(
            IterationRecord(cur.m, eps_i, lam, len(coreset.selected), sampled)
        )
        cur = nxt
        i += 1
    report.i_end = i
    return cur, report


# ---------------------------------------------------------------------------
# Critical-pair diagnostics


def critical_pair(f: DirectedHyperarc, x) -> tuple[int, int]:
    """Biclique pair attaining the energy; lexicographically first on ties."""
    x = np.asarray(x, dtype=float)
    best = None
    best_val = -1.0
    for u in f.tail:
        for v in f.head:
            val = max(x[u] - x[v], 0.0) ** 2
            if val > best_val:
                best, best_val = (u, v), val
    assert best is not None
    return best


@dataclass
class EnergyPartition:
    classes: dict[int, set[int]]
    critical_pairs: dict[int, set[tuple[int, int]]]
    by_pair: dict[tuple[int, tuple[int, int]], set[int]]
    normalization: float
    warnings: list[str] = field(default_factory=list)


def energy_partition(
    H: DirectedHypergraph, coreset: Coreset, x, lam: int
) -> EnergyPartition:
    """Group non-coreset arcs by dyadic normalized-energy class.

    Class i holds arcs with normalized energy in [1/(2^i lam), 1/(2^(i-1) lam));
    x is normalized internally so the total energy is 1.  Zero-energy arcs
    belong to no class.  Non-positive class indices are possible only for
    caller-supplied coresets and are surfaced as warnings.
    """
    model = EnergyModel(H)
    energies = model.energies(x)
    total = float(energies.sum())
    if total <= 0:
        raise ValueError("total energy is zero; cannot normalize")
    classes: dict[int, set[int]] = {}
    critical: dict[int, set[tuple[int, int]]] = {}
    by_pair: dict[tuple[int, tuple[int, int]], set[int]] = {}
    warnings: list[str] = []
    for idx in range(H.m):
        if idx in coreset.selected:
            continue
        q = energies[idx] / total
        if q <= 0:
            continue
        # q*lam in [2^-i, 2^-(i-1))  <=>  i = 1 - exponent(frexp(q*lam))
        _, exponent = math.frexp(q * lam)
        i = 1 - exponent
        if i <= 0:
            warnings.append(f"arc {idx} landed in class {i} (normalized energy {q})")
        pair = critical_pair(H.arcs[idx], x)
        classes.setdefault(i, set()).add(idx)
        critical.setdefault(i, set()).add(pair)
        by_pair.setdefault((i, pair), set()).add(idx)
    return EnergyPartition(classes, critical, by_pair, total, warnings)
