import pytest

from hsparse.coreset import coreset_finder, verify_coreset
from hsparse.core import DirectedHypergraph, arc
from hsparse.instances import gen_random_directed


def small_instance():
    return DirectedHypergraph(
        3,
        (
            arc((0,), (1,), 3.0),
            arc((0,), (1,), 1.0),
            arc((0,), (1,), 2.0),
            arc((1,), (2,), 1.0),
        ),
    )


def test_greedy_takes_heaviest_per_pair():
    H = small_instance()
    cs = coreset_finder(H, 1)
    # pair (0, 1) keeps the weight-3 arc, pair (1, 2) its only arc
    assert cs.partition[(0, 1)] == [0]
    assert cs.partition[(1, 2)] == [3]
    assert cs.selected == {0, 3}
    assert verify_coreset(H, cs).ok


def test_lambda_two_keeps_two_heaviest():
    H = small_instance()
    cs = coreset_finder(H, 2)
    assert cs.partition[(0, 1)] == [0, 2]
    assert verify_coreset(H, cs).ok


def test_everything_selected_when_lambda_large():
    H = small_instance()
    cs = coreset_finder(H, 10)
    assert cs.selected == {0, 1, 2, 3}
    assert verify_coreset(H, cs).ok


def test_tie_break_by_arc_index():
    H = DirectedHypergraph(
        2, (arc((0,), (1,), 1.0), arc((0,), (1,), 1.0), arc((0,), (1,), 1.0))
    )
    cs = coreset_finder(H, 2)
    assert cs.partition[(0, 1)] == [0, 1]


def test_cells_are_disjoint_across_pairs():
    # one arc covering two pairs lands in exactly one cell
    H = DirectedHypergraph(3, (arc((0,), (1, 2), 5.0), arc((0,), (2,), 1.0)))
    cs = coreset_finder(H, 1)
    cells_with_0 = [p for p, cell in cs.partition.items() if 0 in cell]
    assert len(cells_with_0) == 1
    assert verify_coreset(H, cs).ok


def test_invalid_lambda():
    with pytest.raises(ValueError):
        coreset_finder(small_instance(), 0)


def test_verifier_catches_bad_coresets():
    H = small_instance()
    cs = coreset_finder(H, 1)
    # break condition 3: swap the kept arc for a lighter one
    cs.partition[(0, 1)] = [1]
    cs.selected = {1, 3}
    check = verify_coreset(H, cs)
    assert not check.ok
    assert any("condition 3" in v for v in check.violations)


def test_verifier_catches_missing_cell():
    H = small_instance()
    cs = coreset_finder(H, 1)
    cs.partition[(0, 1)] = []
    cs.selected = {3}
    check = verify_coreset(H, cs)
    assert not check.ok
    assert any("condition 2" in v for v in check.violations)


@pytest.mark.parametrize("lam", [1, 2, 5])
@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_random_instances_verify(lam, seed):
    H = gen_random_directed(12, 200, 5, (0.5, 2.0), seed=seed)
    cs = coreset_finder(H, lam)
    check = verify_coreset(H, cs)
    assert check.ok, check.violations
    assert len(cs.selected) <= lam * H.n * H.n
