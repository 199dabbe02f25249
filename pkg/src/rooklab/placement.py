"""m-level rook placements and their statistics."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import _kernels
from .board import FerrersBoard, _as_board, level_counts, level_of
from .errors import ColumnClash, LevelClash, OffBoard
from .polynomial import Polynomial

__all__ = [
    "Placement",
    "InvBreakdown",
    "validate_placement",
    "enumerate_placements",
    "rook_count",
    "rook_numbers",
    "level_numbering",
    "inv",
    "inv_breakdown",
    "q_rook_polynomial",
    "p_weight",
    "parse_cells",
]


@dataclass(frozen=True)
class Placement:
    board: FerrersBoard
    m: int
    cells: frozenset

    @property
    def k(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)

    def to_json(self) -> str:
        return json.dumps([list(c) for c in self.sorted_cells()])

    def __iter__(self):
        return iter(self.sorted_cells())


def _cell_set(cells) -> frozenset:
    if isinstance(cells, Placement):
        return cells.cells
    return frozenset((int(c), int(r)) for c, r in cells)


def parse_cells(text: str) -> list[tuple[int, int]]:
    """Parse ``"[[1,1],[5,3]]"`` or ``"1,1;5,3"``."""
    text = text.strip()
    if not text:
        return []
    if text.startswith("["):
        return [(int(c), int(r)) for c, r in json.loads(text)]
    out = []
    for chunk in text.split(";"):
        c, r = chunk.split(",")
        out.append((int(c), int(r)))
    return out


def validate_placement(B, m: int, cells) -> Placement:
    B = _as_board(B)
    cells = _cell_set(cells)
    cols, lvls = set(), set()
    for cell in sorted(cells):
        if not B.contains(cell):
            raise OffBoard(cell)
    for c, r in sorted(cells):
        if c in cols:
            raise ColumnClash(c)
        cols.add(c)
    for c, r in sorted(cells, key=lambda cell: (cell[1], cell[0])):
        lv = level_of(r, m)
        if lv in lvls:
            raise LevelClash(lv)
        lvls.add(lv)
    return Placement(B, m, cells)


def _placements(heights, m, k):
    n = len(heights)
    chosen = []
    used = set()

    def walk(start, left):
        if left == 0:
            yield tuple(chosen)
            return
        for c in range(start, n - left + 2):
            for r in range(1, heights[c - 1] + 1):
                lv = (r - 1) // m
                if lv in used:
                    continue
                used.add(lv)
                chosen.append((c, r))
                yield from walk(c + 1, left - 1)
                chosen.pop()
                used.discard(lv)

    yield from walk(1, k)


def enumerate_placements(B, m: int, k: int) -> list[Placement]:
    """All k-rook placements, ordered lexicographically by sorted cell list."""
    B = _as_board(B)
    return [Placement(B, m, frozenset(cs)) for cs in _placements(B.heights, m, k)]


def iter_cell_tuples(B, m: int, k: int):
    """Like :func:`enumerate_placements` but yields sorted cell tuples."""
    return _placements(_as_board(B).heights, m, k)


def rook_numbers(B, m: int) -> list[int]:
    """``[r_0, r_1, ...]`` with trailing zeros dropped (r_0 always kept)."""
    counts = _kernels.rook_numbers(_as_board(B).heights, m)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def rook_count(B, m: int, k: int) -> int:
    counts = _kernels.rook_numbers(_as_board(B).heights, m)
    return counts[k] if k < len(counts) else 0


def level_numbering(B, m: int):
    """Return ``(forward, inverse)``: cell -> (level, number) and back."""
    B = _as_board(B)
    forward, inverse = {}, {}
    for p in range(1, B.num_levels(m) + 1):
        n = 0
        for c in range(len(B), 0, -1):
            h = B.heights[c - 1]
            for r in range((p - 1) * m + 1, min(h, p * m) + 1):
                n += 1
                forward[(c, r)] = (p, n)
                inverse[(p, n)] = (c, r)
    return forward, inverse


def _rook_rows(B: FerrersBoard, cells) -> list[int]:
    rows = [0] * len(B)
    for c, r in cells:
        rows[c - 1] = r
    return rows


def inv(B, m: int, pi) -> int:
    B = _as_board(B)
    return _kernels.inv(B.heights, m, _rook_rows(B, _cell_set(pi)))


@dataclass(frozen=True)
class InvBreakdown:
    h: tuple[int, ...]
    nw: tuple[int, ...]
    hinv: tuple[int, ...]
    h_col: tuple[int, ...]
    nw_col: tuple[int, ...]
    vinv: tuple[int, ...]


def inv_breakdown(B, m: int, pi) -> InvBreakdown:
    """Per-level (``hinv``) and per-column (``vinv``) decompositions of inv."""
    B = _as_board(B)
    cells = _cell_set(pi)
    fwd, _ = level_numbering(B, m)
    counts = level_counts(B, m)
    by_level = {level_of(r, m): (c, r) for c, r in cells}
    h, nw = [], []
    for p, lp in enumerate(counts, 1):
        rook = by_level.get(p)
        if rook is None:
            h.append(lp)
            nw.append(sum(1 for c, r in cells if level_of(r, m) > p))
        else:
            h.append(lp - fwd[rook][1])
            nw.append(sum(1 for c, r in cells if level_of(r, m) > p and c < rook[0]))
    by_col = {c: r for c, r in cells}
    hc, nwc = [], []
    for c, b in enumerate(B.heights, 1):
        r = by_col.get(c)
        if r is None:
            hc.append(b)
            nwc.append(sum(1 for c2, _ in cells if c2 < c))
        else:
            hc.append(b - r)
            p = level_of(r, m)
            nwc.append(sum(1 for c2, r2 in cells if c2 < c and level_of(r2, m) > p))
    return InvBreakdown(
        tuple(h),
        tuple(nw),
        tuple(a - m * b for a, b in zip(h, nw)),
        tuple(hc),
        tuple(nwc),
        tuple(a - m * b for a, b in zip(hc, nwc)),
    )


def q_rook_polynomial(B, m: int, k: int) -> Polynomial:
    dist = _kernels.inv_distribution(_as_board(B).heights, m, k)
    return Polynomial.from_dict(dist, var="q")


def p_weight(B, m: int, pi) -> int:
    """beta(pi) minus m times the sum of occupied columns."""
    B = _as_board(B)
    cells = _cell_set(pi)
    by_col = {c: r for c, r in cells}
    beta = 0
    left_levels = set()
    for c, b in enumerate(B.heights, 1):
        r = by_col.get(c)
        if r:
            beta += sum(1 for y in range(1, r) if level_of(y, m) not in left_levels)
            left_levels.add(level_of(r, m))
    return beta - m * sum(by_col)
