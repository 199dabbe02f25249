"""Factorization identities for m-level rook numbers."""

from __future__ import annotations

from .board import _as_board, is_singleton, level_counts, m_increasing_representative, pad_to
from .errors import BudgetTooSmall, NotSingleton
from .placement import rook_numbers
from .polynomial import Polynomial, product

__all__ = [
    "falling_factorial",
    "default_budget",
    "rook_side",
    "level_product_side",
    "briggs_remmel_side",
    "are_equivalent",
]


def falling_factorial(k: int, m: int) -> Polynomial:
    """``x (x - m) (x - 2m) ... (x - (k-1)m)``."""
    return product((Polynomial.linear(-j * m) for j in range(k)), var="x")


def _size(B, m: int) -> tuple[int, int]:
    core = _as_board(B).stripped()
    return len(core), core.num_levels(m)


def default_budget(B, m: int) -> int:
    return max(_size(B, m))


def _budget(B, m: int, N):
    low = default_budget(B, m)
    if N is None:
        return low
    if N < low:
        raise BudgetTooSmall(f"N={N} is below max(columns, levels)={low}")
    return N


def rook_side(B, m: int, N: int | None = None) -> Polynomial:
    N = _budget(B, m, N)
    r = rook_numbers(B, m)
    terms = Polynomial((), "x")
    for k, rk in enumerate(r):
        if k <= N and rk:
            terms = terms + falling_factorial(N - k, m) * rk
    return terms


def level_product_side(B, m: int, N: int | None = None) -> Polynomial:
    N = _budget(B, m, N)
    counts = level_counts(B, m)
    counts = counts + [0] * (N - len(counts))
    return product(
        (Polynomial.linear(counts[N - i] - (i - 1) * m) for i in range(1, N + 1)), var="x"
    )


def briggs_remmel_side(B, m: int, N: int | None = None) -> Polynomial:
    N = _budget(B, m, N)
    if not is_singleton(B, m):
        raise NotSingleton(f"board {B} is not {m}-singleton")
    heights = pad_to(B, N).heights
    return product(
        (Polynomial.linear(b - i * m) for i, b in enumerate(heights)), var="x"
    )


def are_equivalent(B, B2, m: int) -> bool:
    a = m_increasing_representative(_as_board(B).stripped(), m)[0]
    b = m_increasing_representative(_as_board(B2).stripped(), m)[0]
    return a == b
