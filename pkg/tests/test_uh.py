import math

import pytest

from hsparse.core import UndirectedHypergraph, edge
from hsparse.dh import log43
from hsparse.instances import gen_random_undirected
from hsparse.sampling import CoinStream
from hsparse.spanner import spanner_bundle
from hsparse.uh import (
    UhConfig,
    bundle_resistance_bound,
    ft_uh_sparsify,
    rank_bucket_sparsify,
    rank_buckets,
    uh_onestep,
    uh_schedule,
    uh_sparsify,
    uh_target_size,
)


def test_target_size_modes():
    practical = uh_target_size(16, 4, 0.5, "practical")
    theory = uh_target_size(16, 4, 0.5, "theory")
    assert practical == 16 * 64 / 0.25
    assert theory == practical * 16.0  # log2(16)^2
    assert theory > practical


def test_schedule_values():
    cfg = UhConfig(mode="practical")
    eps_i, lam = uh_schedule(2000, 200.0, 0.5, 3, cfg)
    expected_eps = 0.5 / (4.0 * log43(10.0) ** 2)
    assert eps_i == pytest.approx(expected_eps)
    assert lam == math.ceil(8.0 * 27 * math.log2(2000) ** 2 / expected_eps**2)


def test_config_validation():
    with pytest.raises(ValueError):
        UhConfig(mode="theory", lambda_override=2)
    with pytest.raises(ValueError):
        UhConfig(fault_k=-1)
    with pytest.raises(ValueError):
        UhConfig(mode="weird")


def test_onestep_keeps_bundle_and_doubles_rest():
    H = gen_random_undirected(12, 300, 4, (0.5, 2.0), seed=0)
    cfg = UhConfig(stretch=3.0)
    kept = spanner_bundle(H, 2, k=3.0).union()
    out = uh_onestep(H, 2, cfg, CoinStream(0, 0))
    by_origin = dict(zip(out.origins, range(out.m)))
    for idx in kept:
        assert idx in by_origin
        assert out.edges[by_origin[idx]].weight == H.edges[idx].weight
    for pos, origin in enumerate(out.origins):
        if origin not in kept:
            assert out.edges[pos].weight == 2.0 * H.edges[origin].weight
            assert out.doublings[pos] == 1


def test_size_band_enforced():
    H = UndirectedHypergraph(6, (edge((0, 1), 1.0), edge((0, 1, 2, 3, 4), 1.0)))
    with pytest.raises(ValueError, match="band"):
        uh_sparsify(H, 0.5, UhConfig())


def test_sparsify_noop_below_target():
    H = gen_random_undirected(10, 80, 4, (1.0, 1.0), seed=1)
    out, report = uh_sparsify(H, 0.5, UhConfig(mode="theory"))
    assert out == H
    assert report.i_end == 0


def test_sparsify_shrinks_and_traces():
    H = gen_random_undirected(14, 6000, 4, (0.5, 2.0), seed=2)
    cfg = UhConfig(mode="practical", lambda_override=4, seed=0)
    out, report = uh_sparsify(H, 0.9, cfg)
    assert out.m < H.m
    report.check()
    for pos, origin in enumerate(out.origins):
        assert out.edges[pos].weight == H.edges[origin].weight * 2.0 ** out.doublings[pos]


def test_ft_keeps_more():
    H = gen_random_undirected(14, 6000, 4, (0.5, 2.0), seed=3)
    cfg = UhConfig(mode="practical", lambda_override=4, seed=0)
    plain, rep0 = ft_uh_sparsify(H, 0.9, 0, cfg)
    padded, rep3 = ft_uh_sparsify(H, 0.9, 3, cfg)
    base, _ = uh_sparsify(H, 0.9, cfg)
    assert plain == base  # k=0 is the plain algorithm
    assert rep3.iterations[0].coreset_size >= rep0.iterations[0].coreset_size


def test_rank_buckets_exact():
    H = UndirectedHypergraph(
        10,
        (
            edge((0, 1), 1.0),  # size 2 -> bucket 1
            edge((0, 1, 2), 1.0),  # size 3 -> bucket 2
            edge((0, 1, 2, 3), 1.0),  # size 4 -> bucket 2
            edge((0, 1, 2, 3, 4), 1.0),  # size 5 -> bucket 3
            edge(tuple(range(8)), 1.0),  # size 8 -> bucket 3
        ),
    )
    buckets = rank_buckets(H, 8)
    assert buckets == {1: [0], 2: [1, 2], 3: [3, 4]}
    with pytest.raises(ValueError):
        rank_buckets(H, 4)


def test_rank_bucket_sparsify_preserves_noop_buckets():
    H = UndirectedHypergraph(
        8, tuple(edge((i, (i + 1) % 8), 1.0) for i in range(8))
        + (edge((0, 1, 2), 2.0),)
    )
    out, reports = rank_bucket_sparsify(H, 0.5, UhConfig(mode="theory"))
    assert set(reports) == {1, 2}
    assert out.m == H.m
    # origins map back into the combined instance
    assert sorted(out.origins) == list(range(H.m))
    for pos, origin in enumerate(out.origins):
        assert out.edges[pos].vertices == H.edges[origin].vertices


def test_bundle_resistance_within_bound():
    for seed in range(3):
        H = gen_random_undirected(12, 60, 4, (0.5, 2.0), seed=seed)
        bundle = spanner_bundle(H, 2, k=3, use_star=False)
        worst, bound = bundle_resistance_bound(H, bundle, 4)
        assert worst <= bound + 1e-9
