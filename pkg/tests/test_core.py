import numpy as np
import pytest

from hsparse.core import (
    DirectedHypergraph,
    EnergyModel,
    UndirectedHypergraph,
    arc,
    arc_energy,
    biclique,
    clique,
    cut_value,
    directed_energy,
    edge,
    edge_energy,
    rank,
    total_energy,
)


def test_arc_canonicalization():
    f = arc((3, 1, 1), (2,), 1.5)
    assert f.tail == (1, 3)
    assert f.head == (2,)
    assert f.size == 3
    assert arc((1, 3), (2,), 1.5) == f


def test_edge_canonicalization():
    f = edge((5, 2, 2, 0), 1.0)
    assert f.vertices == (0, 2, 5)
    assert f.size == 3


def test_nonpositive_weight_rejected():
    with pytest.raises(ValueError):
        arc((0,), (1,), 0.0)
    with pytest.raises(ValueError):
        edge((0, 1), -2.0)


def test_vertex_range_validated():
    with pytest.raises(ValueError):
        DirectedHypergraph(2, (arc((0,), (2,), 1.0),))
    with pytest.raises(ValueError):
        UndirectedHypergraph(3, (edge((0, 3), 1.0),))


def test_directed_energy_formula():
    # z * (max tail - min head)_+^2
    f = arc((0, 1), (2, 3), 2.0)
    x = np.array([1.0, 4.0, 3.0, 0.5])
    assert arc_energy(f, x) == pytest.approx(2.0 * (4.0 - 0.5) ** 2)
    # directed: reversed gap contributes nothing
    assert arc_energy(f, np.array([0.0, 1.0, 5.0, 6.0])) == 0.0


def test_undirected_energy_formula():
    f = edge((0, 1, 2), 3.0)
    x = np.array([2.0, -1.0, 0.5])
    assert edge_energy(f, x) == pytest.approx(3.0 * 9.0)
    # sign-flip invariance
    assert edge_energy(f, -x) == pytest.approx(3.0 * 9.0)


def test_singleton_edge_has_zero_energy():
    f = edge((1,), 2.0)
    assert edge_energy(f, np.array([0.0, 5.0])) == 0.0


def test_overlapping_tail_head():
    # (u, u) pairs are legal; with x constant on the overlap the gap can be 0
    f = arc((0, 1), (1, 2), 1.0)
    assert (1, 1) in biclique(f)
    x = np.array([0.0, 2.0, 3.0])
    assert arc_energy(f, x) == 0.0  # max tail 2, min head 2


def test_cut_value_is_energy_at_indicator():
    H = DirectedHypergraph(4, (arc((0, 1), (2,), 1.0), arc((2,), (0,), 3.0)))
    # X = {0, 1}: first arc crosses forward, second does not
    assert cut_value(H, {0, 1}) == 1.0
    assert cut_value(H, {2}) == 3.0
    assert cut_value(H, {0, 1, 2}) == 0.0
    assert cut_value(H, set()) == 0.0


def test_energy_model_matches_scalar_path():
    rng = np.random.default_rng(0)
    arcs = []
    for _ in range(40):
        t = rng.choice(8, size=rng.integers(1, 4), replace=False)
        h = rng.choice(8, size=rng.integers(1, 4), replace=False)
        arcs.append(arc(t, h, float(rng.uniform(0.1, 2.0))))
    H = DirectedHypergraph(8, tuple(arcs))
    model = EnergyModel(H)
    for _ in range(20):
        x = rng.standard_normal(8)
        per_arc = model.energies(x)
        expected = [arc_energy(f, x) for f in H.arcs]
        assert np.allclose(per_arc, expected)
        assert total_energy(H, x) == pytest.approx(sum(expected))


def test_energy_model_batch_matches_single():
    rng = np.random.default_rng(1)
    edges = [edge(rng.choice(6, size=3, replace=False), 1.0) for _ in range(10)]
    H = UndirectedHypergraph(6, tuple(edges))
    model = EnergyModel(H)
    X = rng.standard_normal((7, 6))
    batch = model.totals(X)
    singles = [model.total(x) for x in X]
    assert np.allclose(batch, singles)


def test_directed_energy_subset():
    H = DirectedHypergraph(3, (arc((0,), (1,), 1.0), arc((1,), (2,), 5.0)))
    x = np.array([1.0, 0.0, -1.0])
    assert directed_energy(H, x, arc_indices=[0]) == 1.0
    assert directed_energy(H, x, arc_indices=[]) == 0.0
    assert directed_energy(H, x) == 6.0


def test_rank():
    H = DirectedHypergraph(5, (arc((0, 1), (2, 3, 4), 1.0), arc((0,), (1,), 1.0)))
    assert rank(H) == 5
    U = UndirectedHypergraph(4, (edge((0, 1, 2, 3), 1.0),))
    assert rank(U) == 4
    with pytest.raises(ValueError):
        rank(DirectedHypergraph(3, ()))


def test_clique_pairs():
    assert clique(edge((2, 0, 5), 1.0)) == {(0, 2), (0, 5), (2, 5)}
