"""Enumerate Ferrers boards and group them into equivalence classes."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .board import FerrersBoard, is_singleton, m_increasing_representative

__all__ = [
    "boards_with_cells",
    "boards_up_to",
    "boards_in_box",
    "equivalence_classes",
    "equivalent_pairs",
]


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def boards_with_cells(n: int) -> list[FerrersBoard]:
    """All boards without zero columns having exactly ``n`` cells."""
    return [FerrersBoard(tuple(reversed(p))) for p in _partitions(n, n)]


def boards_up_to(max_cells: int, include_empty: bool = False) -> list[FerrersBoard]:
    start = 0 if include_empty else 1
    out = []
    for n in range(start, max_cells + 1):
        out.extend(boards_with_cells(n))
    return out


def boards_in_box(columns: int, max_height: int) -> list[FerrersBoard]:
    """All boards with exactly ``columns`` columns (zeros allowed) and heights <= max_height."""
    return [
        FerrersBoard(h)
        for h in combinations_with_replacement(range(max_height + 1), columns)
    ]


def equivalence_classes(boards, m: int, singleton_only: bool = False) -> dict[FerrersBoard, list[FerrersBoard]]:
    """Group boards by their m-increasing representative."""
    classes: dict[FerrersBoard, list[FerrersBoard]] = {}
    for B in boards:
        if singleton_only and not is_singleton(B, m):
            continue
        rep = m_increasing_representative(B.stripped(), m)[0]
        classes.setdefault(rep, []).append(B)
    return classes


def equivalent_pairs(boards, m: int, singleton_only: bool = False, include_diagonal: bool = True):
    """Ordered pairs (B, B2) of equivalent boards."""
    for members in equivalence_classes(boards, m, singleton_only).values():
        for a in members:
            for b in members:
                if include_diagonal or a != b:
                    yield a, b
