import pytest
from hypothesis import given

import oracles
from conftest import boards, ms
from rooklab.board import (
    INFINITY,
    FerrersBoard,
    arm,
    ascii_diagram,
    compare_reversal_lex,
    delta,
    fits_inside,
    is_m_increasing,
    is_permissible,
    is_singleton,
    l_operator,
    leg,
    level_counts,
    local_l,
    m_increasing_representative,
    make_board,
    pad_to,
    parse_board,
    root_vector,
    round_to_multiple,
    singleton_of,
    square,
)
from rooklab.enumeration import boards_up_to
from rooklab.errors import (
    DoesNotFit,
    EmptyIntersection,
    NotPermissible,
    NotSingleton,
    RejectsNegative,
    RejectsNonMonotone,
)
from rooklab.placement import rook_numbers


def test_make_board():
    assert make_board([1, 3, 3, 4]).heights == (1, 3, 3, 4)
    assert make_board([]).heights == ()
    with pytest.raises(RejectsNonMonotone):
        make_board([2, 1])
    with pytest.raises(RejectsNegative):
        make_board([-1, 2])


def test_parse_board_formats():
    assert parse_board("1,3,3,4") == parse_board("[1, 3, 3, 4]") == FerrersBoard((1, 3, 3, 4))
    assert str(FerrersBoard((1, 3, 3, 4))) == "1,3,3,4"
    assert parse_board(FerrersBoard((0, 2)).to_json()) == FerrersBoard((0, 2))


def test_round_to_multiple():
    assert round_to_multiple(5, 3, "up") == 6
    assert round_to_multiple(6, 3, "down") == 6
    assert round_to_multiple(0, 4, "up") == 0
    assert round_to_multiple(7, 3, "down") == 6
    assert round_to_multiple(INFINITY, 2, "down") is INFINITY


def test_infinity_ordering():
    assert INFINITY > 10**30
    assert not INFINITY < 5
    assert INFINITY == INFINITY


def test_level_counts():
    assert level_counts((1, 3, 3, 4), 2) == [7, 4]
    assert level_counts((4, 4, 4, 7, 10, 10, 10), 3) == [21, 15, 10, 3]
    assert level_counts((), 2) == []


def test_is_singleton_examples():
    assert is_singleton((1, 2, 4, 4), 2)
    assert not is_singleton((1, 1, 3, 4), 2)
    assert is_singleton((3, 3, 6, 7, 9, 9, 12), 3)


def test_singleton_of_examples():
    assert singleton_of((1, 3, 3, 4), 2).heights == (1, 2, 4, 4)
    assert singleton_of((4, 4, 4, 7, 10, 10, 10), 3).heights == (3, 3, 6, 7, 9, 9, 12)
    assert singleton_of((1, 2, 4, 4), 2).heights == (1, 2, 4, 4)


def test_l_operator_examples():
    assert l_operator((1, 2, 4, 4), 2).heights == (4, 7)
    assert l_operator((4, 7), 2).heights == (1, 2, 4, 4)
    assert l_operator((), 3).heights == ()


def test_arm_and_leg():
    assert arm((1, 1, 3, 4), 2, 4, 1) == 2
    assert arm((1, 4, 4, 5), 2, 4, 2) == 1
    assert arm((1, 4, 4, 5), 2, 5, 1) is INFINITY
    assert leg((1, 1, 3, 4), 2, 4, 1) == 4
    assert leg((1, 4, 4, 5), 2, 3, 2) == 2
    assert leg((1, 4, 4, 5), 2, 3, 0) is INFINITY


def test_permissibility_examples():
    assert not is_permissible((1, 4, 4, 5), 2, 3, 2)
    assert is_permissible((1, 4, 4, 5), 2, 4, 2)
    assert arm((1, 2, 4, 4), 2, 4, 2) == 0
    assert is_permissible((1, 2, 4, 4), 2, 4, 2)


def test_permissibility_errors():
    with pytest.raises(NotSingleton):
        is_permissible((1, 1, 3, 4), 2, 4, 1)
    with pytest.raises(EmptyIntersection):
        is_permissible((1, 4, 4, 5), 2, 1, 2)
    with pytest.raises(NotPermissible) as info:
        local_l((1, 4, 4, 5), 2, 3, 2)
    assert info.value.failed


def test_local_l_examples():
    assert local_l((1, 4, 4, 5), 2, 4, 2).heights == (1, 2, 3, 8)
    assert local_l((1, 2, 6, 7), 2, 4, 3).heights == (1, 2, 5, 8)
    # a column with fewer than m cells in the level: the transform is the identity
    assert local_l((1, 2, 4, 4), 2, 1, 1).heights == (1, 2, 4, 4)


def test_local_l_widens_on_the_left_in_the_bottom_level():
    assert local_l((2,), 1, 1, 1).heights == (1, 1)
    assert local_l((3,), 1, 1, 1).heights == (1, 1, 1)


def test_is_m_increasing():
    assert is_m_increasing((3, 5, 8), 2)
    assert not is_m_increasing((1, 2, 6, 7), 2)
    assert is_m_increasing((5,), 3)
    assert is_m_increasing((0, 0, 3, 5), 2)


def test_compare_reversal_lex():
    assert compare_reversal_lex((1, 3, 3, 4), (1, 2, 4, 4)) == -1
    assert compare_reversal_lex((1, 2, 5, 8), (1, 2, 6, 7)) == 1
    assert compare_reversal_lex((2, 3), (2, 3)) == 0
    assert compare_reversal_lex((3,), (1, 3)) == -1


def test_root_vector():
    assert sorted(root_vector((0, 0, 2, 3), 2, 4)) == [0, 2, 2, 3]
    assert root_vector((0, 0, 1, 4), 2, 4) == (0, 2, 3, 2)
    assert root_vector(delta(5, 2), 2, 5) == (0,) * 5
    assert root_vector((2, 3), 2, 4) == (0, 2, 2, 3)
    with pytest.raises(DoesNotFit):
        root_vector((3, 3), 1, 2)


def test_fits_inside_and_ambient_boards():
    assert fits_inside((2, 3), (0, 2, 4, 6))
    assert fits_inside((1, 3), (1, 3))
    assert not fits_inside((0, 2, 4, 6), (2, 3))
    assert delta(4, 2).heights == (0, 2, 4, 6)
    assert square(3, 2).heights == (6, 6, 6)
    assert delta(0, 3).heights == ()
    assert pad_to((0, 2), 3).heights == (0, 0, 2)
    with pytest.raises(DoesNotFit):
        pad_to((1, 2, 3), 2)


def test_representative_script():
    rep, steps = m_increasing_representative((1, 1, 1, 6, 7), 2)
    assert rep.heights == (3, 5, 8)
    assert [s.kind for s in steps] == ["to_singleton", "local_l", "local_l"]
    assert [s.target.heights for s in steps] == [(1, 2, 6, 7), (1, 2, 5, 8), (3, 5, 8)]
    assert [(s.i, s.p) for s in steps[1:]] == [(4, 3), (2, 1)]
    for a, b in zip(steps, steps[1:]):
        assert a.target == b.source
    assert m_increasing_representative((3, 5, 8), 2) == (FerrersBoard((3, 5, 8)), [])


def test_representative_of_small_board():
    rep, _ = m_increasing_representative((1, 3, 3, 4), 2)
    assert is_m_increasing(rep, 2)
    assert rep.cells == 11
    assert oracles.rook_numbers(rep.heights, 2) == oracles.rook_numbers((1, 3, 3, 4), 2)


def test_ascii_diagram_marks_rooks_and_levels():
    text = ascii_diagram((1, 2), 2, [(2, 2)])
    assert text.splitlines() == [" R", ".."]


@given(boards(), ms)
def test_singleton_of_properties(heights, m):
    S = singleton_of(heights, m)
    assert level_counts(S, m) == level_counts(heights, m)
    assert is_singleton(S, m)
    assert singleton_of(S, m) == S
    assert compare_reversal_lex(S, heights) >= 0


@given(boards(), ms)
def test_l_operator_properties(heights, m):
    L = l_operator(heights, m)
    assert is_singleton(L, m)
    if is_singleton(heights, m):
        assert l_operator(L, m) == FerrersBoard(heights).stripped()


def _raw_transform(h, m, i, p):
    """Independent construction of the local transform; None if not a board."""
    base = (p - 1) * m
    sub = [max(0, x - base) for x in h[:i]]
    t = -(-max(sub, default=0) // m)
    lsub = [sum(min(max(x - (q - 1) * m, 0), m) for x in sub) for q in range(1, t + 1)][::-1]
    if len(lsub) > i:
        if p > 1:
            return None
        pad = len(lsub) - i
        h, i = (0,) * pad + tuple(h), i + pad
    cols = []
    for c in range(1, i + 1):
        lower = min(h[c - 1], base)
        j = c - (i - len(lsub))
        add = lsub[j - 1] if j >= 1 else 0
        if add and lower < base:
            return None
        cols.append(lower + add)
    new = tuple(cols) + tuple(h[i:])
    if any(a > b for a, b in zip(new, new[1:])):
        return None
    return new


@pytest.mark.parametrize("m", [1, 2, 3])
def test_permissible_iff_raw_transform_is_singleton_board(m):
    for B in boards_up_to(10):
        if not is_singleton(B, m):
            continue
        for i in range(1, len(B) + 1):
            for p in range(1, B.num_levels(m) + 1):
                if B.height(i) <= (p - 1) * m:
                    continue
                raw = _raw_transform(B.heights, m, i, p)
                valid = raw is not None and is_singleton(raw, m)
                assert is_permissible(B, m, i, p) == valid, (B, i, p)
                if valid:
                    assert local_l(B, m, i, p).heights == raw


@pytest.mark.parametrize("m", [1, 2, 3])
def test_equal_representatives_iff_equal_rook_numbers(m):
    boards = boards_up_to(12)
    reps = {B: m_increasing_representative(B, m)[0] for B in boards}
    by_counts: dict = {}
    for B in boards:
        by_counts.setdefault(tuple(rook_numbers(B, m)), set()).add(reps[B])
    assert all(len(r) == 1 for r in by_counts.values())
    assert len({r for r in reps.values()}) == len(by_counts)


@given(boards(max_cols=6, max_height=10), ms)
def test_representative_steps_increase(heights, m):
    rep, steps = m_increasing_representative(heights, m)
    assert is_m_increasing(rep, m)
    for s in steps:
        assert compare_reversal_lex(s.target, s.source) == 1
        if s.kind == "local_l":
            assert is_permissible(s.source, m, s.i, s.p)
