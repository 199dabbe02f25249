from rooklab.board import FerrersBoard, is_singleton
from rooklab.enumeration import (
    boards_in_box,
    boards_up_to,
    boards_with_cells,
    equivalence_classes,
    equivalent_pairs,
)
from rooklab.placement import rook_numbers

# number of integer partitions of n
PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_board_counts():
    for n, count in enumerate(PARTITIONS):
        assert len(boards_with_cells(n)) == count
    assert len(boards_up_to(12)) == sum(PARTITIONS[1:])
    assert FerrersBoard(()) in boards_up_to(3, include_empty=True)
    assert len(boards_in_box(2, 2)) == 6


def test_classes_share_rook_numbers():
    classes = equivalence_classes(boards_up_to(8), 2)
    for rep, members in classes.items():
        assert {tuple(rook_numbers(B, 2)) for B in members} == {tuple(rook_numbers(rep, 2))}
    singles = equivalence_classes(boards_up_to(8), 2, singleton_only=True)
    assert all(is_singleton(B, 2) for ms in singles.values() for B in ms)


def test_pairs():
    pairs = list(equivalent_pairs(boards_up_to(4), 1, include_diagonal=False))
    assert all(a != b for a, b in pairs)
    assert (FerrersBoard((1, 1)), FerrersBoard((2,))) in pairs
