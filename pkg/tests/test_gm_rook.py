import pytest

import oracles
from rooklab.board import FerrersBoard, delta, is_singleton, root_vector
from rooklab.enumeration import boards_up_to, equivalence_classes
from rooklab.errors import BudgetTooLarge, DegreeTooLarge, DoesNotFit, NotEquivalent, NotSingleton
from rooklab.gm_rook import (
    RookConfig,
    ainv,
    config_count,
    elementary_symmetric,
    embed_placement,
    enumerate_configs,
    gm_rook_transport,
    involution_I,
    is_fixed,
    rook_count_formula,
    stirling2,
    transfer_f,
)
from rooklab.placement import enumerate_placements, inv, rook_count

RUNNING, RUNNING_TWIN = FerrersBoard((0, 0, 2, 3)), FerrersBoard((0, 0, 1, 4))


def config(board, N, m, whites, blacks, k):
    return RookConfig(N, m, FerrersBoard(board), frozenset(whites), frozenset(blacks), k)


def test_small_counting_helpers(golden):
    for key, value in golden["stirling2"].items():
        n, d = map(int, key.split(","))
        assert stirling2(n, d) == value
    for d, value in golden["elementary_symmetric"].items():
        assert elementary_symmetric(int(d), [0, 2, 2, 3]) == value
    assert elementary_symmetric(0, []) == 1
    with pytest.raises(DegreeTooLarge):
        elementary_symmetric(3, [1, 2])


def test_rook_count_formula_examples():
    assert rook_count_formula(RUNNING, 2, 4, 1) == 5
    assert rook_count_formula(RUNNING, 2, 4, 2) == 2
    assert rook_count_formula(RUNNING, 2, 4, 0) == 1
    with pytest.raises(BudgetTooLarge):
        rook_count_formula(RUNNING, 2, 4, 4)
    with pytest.raises(NotSingleton):
        rook_count_formula((1, 1, 3, 4), 2, 4, 1)
    with pytest.raises(DoesNotFit):
        rook_count_formula((3, 3), 1, 2, 1)


def test_involution_on_a_three_rook_configuration():
    top_left = config(RUNNING.heights, 4, 2, {(3, 4)}, {(2, 1), (4, 3)}, 3)
    assert top_left in enumerate_configs(RUNNING, 2, 4, 3)
    assert top_left.sign == -1
    top_right = involution_I(top_left)
    assert top_right.whites == {(2, 1), (3, 4)} and top_right.blacks == {(4, 1)}
    assert top_right.sign == 1
    assert involution_I(top_right) == top_left


def test_transfer_images_on_the_running_pair():
    top_left = config(RUNNING.heights, 4, 2, {(3, 4)}, {(2, 1), (4, 3)}, 3)
    bottom_left = transfer_f(top_left, RUNNING_TWIN)
    assert bottom_left.whites == {(4, 6)} and bottom_left.blacks == {(2, 1), (3, 3)}
    bottom_right = transfer_f(involution_I(top_left), RUNNING_TWIN)
    assert bottom_right.whites == {(2, 1), (4, 6)} and bottom_right.blacks == {(3, 1)}
    assert transfer_f(bottom_left, RUNNING) == top_left
    with pytest.raises(NotEquivalent):
        transfer_f(top_left, (0, 0, 0, 4))


def test_ainv_is_kept_when_a_white_turns_black():
    board = (0, 0, 0, 0, 3, 5, 6)
    left = config(board, 7, 2, {(3, 2), (6, 7), (7, 8)}, {(4, 3), (5, 1)}, 5)
    right = involution_I(left)
    assert right.whites == {(6, 7), (7, 8)}
    assert right.blacks == {(3, 2), (4, 5), (5, 3)}
    assert ainv(left) == ainv(right) == 15


def test_i_zero_stratum_and_empty_budget():
    for N, m in [(3, 2), (4, 2), (4, 3)]:
        for k in range(N):
            stratum = [c for c in enumerate_configs(delta(N, m), m, N, k) if c.i == 0]
            assert len(stratum) == m**k * oracles.stirling2(N, N - k)
    only = enumerate_configs(RUNNING, 2, 4, 0)
    assert len(only) == 1 and is_fixed(only[0])


def test_embedding_and_ainv_of_fixed_points():
    extra = delta(4, 2).cells - RUNNING.cells
    for p in enumerate_placements(RUNNING, 2, 2):
        c = embed_placement(RUNNING, 2, 4, p.cells)
        assert is_fixed(c) and involution_I(c) == c
        assert ainv(c) == inv(RUNNING, 2, p.cells) + extra


@pytest.mark.parametrize("N,m", [(3, 1), (4, 1), (3, 2), (4, 2), (3, 3)])
def test_configuration_axioms(N, m):
    for B in boards_up_to(N * (N - 1) * m // 2):
        if len(B) > N or not is_singleton(B, m):
            continue
        try:
            root_vector(B, m, N)
        except DoesNotFit:
            continue
        for k in range(N):
            configs = enumerate_configs(B, m, N, k)
            assert len(configs) == config_count(B, m, N, k)
            assert sum(c.sign for c in configs) == rook_count(B, m, k) == rook_count_formula(B, m, N, k)
            for c in configs:
                d = involution_I(c)
                assert involution_I(d) == c
                assert ainv(d) == ainv(c)
                if is_fixed(c):
                    assert d == c and c.sign == 1
                else:
                    assert d.sign == -c.sign


@pytest.mark.parametrize("N,m", [(4, 2), (4, 1), (3, 3)])
def test_transport_between_equivalent_triangle_boards(N, m):
    candidates = [
        B for B in boards_up_to(N * (N - 1) * m // 2)
        if len(B) <= N and is_singleton(B, m) and all(h <= (N - len(B) + j) * m for j, h in enumerate(B.heights))
    ]
    for members in equivalence_classes(candidates, m).values():
        for B, B2 in zip(members, members[1:]):
            for k in range(N):
                seen = set()
                for p in enumerate_placements(B, m, k):
                    out = gm_rook_transport(B, B2, m, N, k, p.cells, check=True)
                    assert inv(B, m, p.cells) == inv(B2, m, out.cells)
                    seen.add(out.cells)
                assert len(seen) == rook_count(B2, m, k)


def test_running_pair_transport_and_trace():
    traces = []
    images = {gm_rook_transport(RUNNING, RUNNING_TWIN, 2, 4, 1, p.cells, trace=traces).cells for p in enumerate_placements(RUNNING, 2, 1)}
    assert len(images) == 5
    cap = 2 * config_count(RUNNING, 2, 4, 1)
    assert all(1 <= len(t) <= cap for t in traces)
    assert gm_rook_transport(RUNNING, RUNNING_TWIN, 2, 4, 0, []).cells == frozenset()
