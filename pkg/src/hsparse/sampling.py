"""Keyed, order-independent randomness for the samplers.

Each arc's keep/drop coin is a pure function of (seed, round, lineage id), so
one-step sampling is reproducible, independent of iteration order, and safe to
parallelize.  Probe vectors use a nested-seed stream: probe j only ever sees
the sub-seed (seed, j), so enlarging the probe count extends rather than
reshuffles the sequence.
"""

from __future__ import annotations

import hashlib
import struct

import numpy as np

MASK64 = (1 << 64) - 1


def coin(seed: int, round_index: int, lineage: int) -> bool:
    """Fair keyed bit: True means the arc is kept (sampled)."""
    payload = struct.pack("<QQQ", seed & MASK64, round_index & MASK64, lineage & MASK64)
    digest = hashlib.blake2b(payload, digest_size=8).digest()
    return bool(digest[0] & 1)


class CoinStream:
    """Per-round view of the keyed coin sequence."""

    def __init__(self, seed: int, round_index: int = 0):
        self.seed = int(seed)
        self.round_index = int(round_index)

    def keep(self, lineage: int) -> bool:
        return coin(self.seed, self.round_index, lineage)


def probe_rng(seed: int, probe_index: int) -> np.random.Generator:
    """Generator for the probe_index-th probe of a nested-seed stream."""
    return np.random.default_rng((int(seed) & MASK64, int(probe_index)))
