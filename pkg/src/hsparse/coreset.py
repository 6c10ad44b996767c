"""Greedy coreset construction for directed hypergraphs, plus its checker.

A lambda-coreset is a set S of arcs partitioned into cells S^{uv} (one per
ordered vertex pair) such that (1) every arc in S^{uv} has (u, v) in its
biclique, (2) any pair still covered by an unselected arc has a full cell of
lambda arcs, and (3) cell members are at least as heavy as every unselected
arc covering the pair.  The greedy finder visits pairs in lexicographic order
and takes up to lambda heaviest not-yet-selected arcs per pair, ties broken
by arc index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import DirectedHypergraph, biclique


@dataclass
class Coreset:
    selected: set[int]
    partition: dict[tuple[int, int], list[int]]
    lam: int


@dataclass
class CoresetCheck:
    ok: bool
    violations: list[str] = field(default_factory=list)


def _incidence(H: DirectedHypergraph) -> dict[tuple[int, int], list[int]]:
    """Arc indices covering each biclique pair, in canonical arc order."""
    inc: dict[tuple[int, int], list[int]] = {}
    for idx, f in enumerate(H.arcs):
        for u in f.tail:
            for v in f.head:
                inc.setdefault((u, v), []).append(idx)
    return inc


def coreset_finder(H: DirectedHypergraph, lam: int) -> Coreset:
    """Greedy lambda-coreset; pairs visited in lexicographic (u, v) order."""
    if lam < 1:
        raise ValueError(f"lambda must be >= 1, got {lam}")
    inc = _incidence(H)
    weights = [f.weight for f in H.arcs]
    selected: set[int] = set()
    partition: dict[tuple[int, int], list[int]] = {}
    for pair in sorted(inc):
        candidates = [idx for idx in inc[pair] if idx not in selected]
        if len(candidates) > lam:
            # lambda heaviest, ties by canonical arc order
            candidates.sort(key=lambda idx: (-weights[idx], idx))
            cell = sorted(candidates[:lam])
        else:
            cell = candidates
        partition[pair] = cell
        selected.update(cell)
    return Coreset(selected=selected, partition=partition, lam=lam)


def verify_coreset(H: DirectedHypergraph, coreset: Coreset) -> CoresetCheck:
    """Check the three coreset conditions plus disjointness and size.

    Pair coverage is recomputed from scratch (itertools product per arc), so
    the checker does not share the finder's incidence structure.
    """
    violations: list[str] = []
    lam = coreset.lam
    m = H.m
    cover = [set(itertools.product(f.tail, f.head)) for f in H.arcs]

    seen: set[int] = set()
    for pair, cell in coreset.partition.items():
        for idx in cell:
            if not 0 <= idx < m:
                violations.append(f"cell {pair}: arc index {idx} out of range")
                continue
            if pair not in cover[idx]:
                violations.append(f"condition 1: arc {idx} in cell {pair} lacks the pair")
            if idx in seen:
                violations.append(f"disjointness: arc {idx} appears in several cells")
            seen.add(idx)
    if seen != coreset.selected:
        violations.append("partition union differs from selected set")

    unselected = [i for i in range(m) if i not in coreset.selected]
    uncovered_pairs = set().union(*(cover[i] for i in unselected)) if unselected else set()
    for pair in uncovered_pairs:
        cell = coreset.partition.get(pair, [])
        if len(cell) != lam:
            violations.append(
                f"condition 2: pair {pair} covered outside S but |cell| = {len(cell)} != {lam}"
            )

    for pair, cell in coreset.partition.items():
        outside = [H.arcs[i].weight for i in unselected if pair in cover[i]]
        if not outside:
            continue
        heaviest_outside = max(outside)
        for idx in cell:
            if idx < m and H.arcs[idx].weight < heaviest_outside:
                violations.append(
                    f"condition 3: arc {idx} in cell {pair} lighter than an unselected arc"
                )

    if len(coreset.selected) > lam * H.n * H.n:
        violations.append(
            f"size: |S| = {len(coreset.selected)} exceeds lambda * n^2 = {lam * H.n * H.n}"
        )
    return CoresetCheck(ok=not violations, violations=violations)
