import pytest

from rooklab.board import delta, is_singleton
from rooklab.enumeration import boards_up_to
from rooklab.errors import BudgetTooSmall, NotSingleton
from rooklab.poly import (
    are_equivalent,
    briggs_remmel_side,
    default_budget,
    falling_factorial,
    level_product_side,
    rook_side,
)
from rooklab.polynomial import Polynomial, product
from rooklab.placement import rook_numbers


def linear_product(*roots):
    return product(Polynomial.linear(-r) for r in roots)


def test_falling_factorial(golden):
    for key, coeffs in golden["falling_factorial"].items():
        k, m = map(int, key.split(","))
        assert falling_factorial(k, m).coeffs == tuple(coeffs)
    assert falling_factorial(4, 2) == linear_product(0, 2, 4, 6)


def test_rook_side_examples(golden):
    for entry in golden["rook_side"]:
        assert rook_side(entry["board"], entry["m"], entry["N"]).coeffs == tuple(entry["coeffs"])
    assert rook_side((1, 3, 3, 4), 2, 4) == linear_product(0, 0, -1, 2)
    assert rook_side((), 2, 3) == falling_factorial(3, 2)
    assert rook_side(delta(3, 2), 2, 3) == Polynomial.monomial(3)


def test_level_product_side_examples():
    assert level_product_side((1, 3, 3, 4), 2, 4) == linear_product(0, 2, 0, -1)
    assert level_product_side((), 2, 3) == linear_product(0, 2, 4)
    with pytest.raises(BudgetTooSmall):
        level_product_side((1, 3, 3, 4), 2, 3)
    assert default_budget((0, 0, 2, 3), 2) == 2


def test_briggs_remmel_side_examples():
    expected = linear_product(0, 2, 2, 3)
    assert briggs_remmel_side((0, 0, 2, 3), 2, 4) == expected
    assert briggs_remmel_side((0, 0, 1, 4), 2, 4) == expected
    assert briggs_remmel_side(delta(4, 2), 2, 4) == Polynomial.monomial(4)
    with pytest.raises(NotSingleton):
        briggs_remmel_side((1, 1, 3, 4), 2, 4)


def test_are_equivalent():
    assert are_equivalent((1, 1, 1, 6, 7), (3, 5, 8), 2)
    assert are_equivalent((0, 0, 2, 3), (0, 0, 1, 4), 2)
    assert not are_equivalent((1, 1), (1, 2), 2)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_identities_hold_at_two_budgets(m):
    for B in boards_up_to(9):
        N = default_budget(B, m)
        for n in (N, N + 1):
            assert rook_side(B, m, n) == level_product_side(B, m, n)
            if is_singleton(B, m):
                assert briggs_remmel_side(B, m, n) == level_product_side(B, m, n)


@pytest.mark.parametrize("m", [1, 2])
def test_equivalence_agrees_with_rook_numbers(m):
    boards = boards_up_to(7)
    for a in boards:
        for b in boards:
            assert are_equivalent(a, b, m) == (rook_numbers(a, m) == rook_numbers(b, m))
