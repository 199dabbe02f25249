"""Explicit bijections between placements on rook-equivalent boards.

Three elementary maps (board to singleton board, the l-operator, the local
l-operator) are chained along the normal-form scripts of two boards to
transport a placement from one board to any equivalent board.  Every map
preserves the m-inversion number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .board import (
    FerrersBoard,
    FsStep,
    _as_board,
    is_singleton,
    l_operator,
    level_of,
    local_l,
    m_increasing_representative,
    singleton_of,
    subboard_heights,
    widen_for_local_l,
)
from .errors import InvalidPlacement, NotEquivalent, NotSingleton
from .placement import Placement, _cell_set, validate_placement

__all__ = [
    "FsStep",
    "FsScript",
    "map_to_singleton",
    "map_l",
    "map_local_l",
    "equivalence_script",
    "apply_step",
    "transport",
    "transpose_placement",
]

FORWARD, BACKWARD = "forward", "backward"


@lru_cache(maxsize=4096)
def _numbering(heights: tuple, m: int):
    forward, inverse = {}, {}
    top = -(-max(heights, default=0) // m)
    for p in range(1, top + 1):
        n = 0
        for c in range(len(heights), 0, -1):
            for r in range((p - 1) * m + 1, min(heights[c - 1], p * m) + 1):
                n += 1
                forward[(c, r)] = (p, n)
                inverse[(p, n)] = (c, r)
    return forward, inverse


def _check_direction(direction):
    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"direction must be 'forward' or 'backward', not {direction!r}")


# -- board <-> singleton board ----------------------------------------------


def _to_singleton_cells(B: FerrersBoard, BS: FerrersBoard, m, cells, direction):
    # columns are compared right-aligned; ``off`` converts BS columns to B's
    off = len(B) - len(BS)
    if direction == FORWARD:
        src_num, dst_inv = _numbering(B.heights, m)[0], _numbering(BS.heights, m)[1]
        to_aligned, from_aligned = (lambda c: c), (lambda a: a - off)
        dst_aligned = lambda c: c + off  # noqa: E731
    else:
        src_num, dst_inv = _numbering(BS.heights, m)[0], _numbering(B.heights, m)[1]
        to_aligned, from_aligned = (lambda c: c + off), (lambda a: a)
        dst_aligned = lambda c: c  # noqa: E731
    moved, staying = [], []
    for cell in cells:
        c2, r2 = dst_inv[src_num[cell]]
        a_src, a_dst = to_aligned(cell[0]), dst_aligned(c2)
        if a_src == a_dst:
            staying.append([a_src, r2])
        else:
            moved.append((a_src, a_dst, r2))
    for a_src, a_dst, _ in moved:
        if direction == FORWARD:
            lo, hi, step = a_src + 1, a_dst, -1
        else:
            lo, hi, step = a_dst, a_src - 1, 1
        for rook in staying:
            if lo <= rook[0] <= hi:
                rook[0] += step
    out = [(from_aligned(a), r) for a, r in staying]
    out += [(from_aligned(a_dst), r2) for _, a_dst, r2 in moved]
    return frozenset(out)


def map_to_singleton(B, m: int, pi, direction: str = FORWARD) -> Placement:
    """Move a placement between ``B`` and ``singleton_of(B, m)``."""
    _check_direction(direction)
    B = _as_board(B)
    BS = singleton_of(B, m)
    src, dst = (B, BS) if direction == FORWARD else (BS, B)
    cells = validate_placement(src, m, pi).cells
    return Placement(dst, m, _to_singleton_cells(B, BS, m, cells, direction))


# -- l-operator -------------------------------------------------------------


def _l_forward(heights: tuple, m: int, cells):
    t = -(-max(heights, default=0) // m)
    num = _numbering(heights, m)[0]
    out = []
    for cell in cells:
        p, n = num[cell]
        out.append((t - p + 1, n))
    return out


def _l_backward(heights: tuple, m: int, cells):
    t = -(-max(heights, default=0) // m)
    inv_num = _numbering(heights, m)[1]
    return [inv_num[(t - c + 1, a)] for c, a in cells]


def map_l(B, m: int, pi, direction: str = FORWARD) -> Placement:
    """Level ``p``, number ``n`` of singleton ``B`` <-> column ``t-p+1``, row ``n`` of ``l(B)``."""
    _check_direction(direction)
    B = _as_board(B)
    if not is_singleton(B, m):
        raise NotSingleton(f"board {B} is not {m}-singleton")
    LB = l_operator(B, m)
    if direction == FORWARD:
        cells = validate_placement(B, m, pi).cells
        return Placement(LB, m, frozenset(_l_forward(B.heights, m, cells)))
    cells = validate_placement(LB, m, pi).cells
    return Placement(B, m, frozenset(_l_backward(B.heights, m, cells)))


def transpose_placement(B, pi):
    """Reflect a placement through the anti-diagonal (the m = 1 case of ``map_l``)."""
    B = _as_board(B)
    n = len(B)
    t = max(B.heights, default=0)
    return frozenset((t + 1 - r, n + 1 - c) for c, r in _cell_set(pi))


# -- local l-operator -------------------------------------------------------


def _rank_map(src_occupied, dst_occupied, universe):
    free_src = [x for x in universe if x not in src_occupied]
    free_dst = [x for x in universe if x not in dst_occupied]
    return dict(zip(free_src, free_dst))


def _level_transfer(q, src_occupied, dst_occupied):
    rank = q - sum(1 for x in src_occupied if x < q)
    seen, cur = 0, 0
    while seen < rank:
        cur += 1
        if cur not in dst_occupied:
            seen += 1
    return cur


def _local_l_cells(B: FerrersBoard, m, i, p, cells, direction):
    # coordinates on the target side are those of the raw local_l(B) board,
    # which may be wider than B on the left
    pad = widen_for_local_l(B, m, i, p)
    if pad:
        B = FerrersBoard((0,) * pad + B.heights)
        i += pad
        if direction == FORWARD:
            cells = [(c + pad, r) for c, r in cells]
    base = (p - 1) * m
    sub = subboard_heights(B, m, i, p)
    lsub = l_operator(sub, m).heights
    shift = i - len(lsub)
    inside = [(c, r) for c, r in cells if c <= i and r > base]
    below = [(c, r) for c, r in cells if c <= i and r <= base]
    right = [(c, r) for c, r in cells if c > i]
    if direction == FORWARD:
        compact = [(c, r - base) for c, r in inside]
        new_inside = [(c + shift, r + base) for c, r in _l_forward(sub, m, compact)]
    else:
        compact = [(c - shift, r - base) for c, r in inside]
        new_inside = [(c, r + base) for c, r in _l_backward(sub, m, compact)]
    col_map = _rank_map(
        {c for c, _ in inside}, {c for c, _ in new_inside}, range(1, i + 1)
    )
    src_lv = {level_of(r, m) for _, r in inside}
    dst_lv = {level_of(r, m) for _, r in new_inside}
    out = list(new_inside)
    out += [(col_map[c], r) for c, r in below]
    for c, r in right:
        q = level_of(r, m)
        q2 = _level_transfer(q, src_lv, dst_lv)
        out.append((c, r + (q2 - q) * m))
    if pad and direction == BACKWARD:
        return frozenset((c - pad, r) for c, r in out)
    return frozenset(out)


def map_local_l(B, m: int, i: int, p: int, pi, direction: str = FORWARD) -> Placement:
    """Move a placement between singleton ``B`` and ``local_l(B, m, i, p)``."""
    _check_direction(direction)
    B = _as_board(B)
    if not is_singleton(B, m):
        raise NotSingleton(f"board {B} is not {m}-singleton")
    Bt = local_l(B, m, i, p)
    src, dst = (B, Bt) if direction == FORWARD else (Bt, B)
    cells = validate_placement(src, m, pi).cells
    return Placement(dst, m, _local_l_cells(B, m, i, p, cells, direction))


# -- scripts and transport --------------------------------------------------


@dataclass(frozen=True)
class FsScript:
    source: FerrersBoard
    target: FerrersBoard
    steps: tuple[FsStep, ...]

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def reversed(self) -> "FsScript":
        return FsScript(self.target, self.source, tuple(s.reversed() for s in reversed(self.steps)))

    def to_list(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]

    def to_json(self) -> str:
        return json.dumps(self.to_list())


@lru_cache(maxsize=4096)
def _rep(heights: tuple, m: int):
    rep, steps = m_increasing_representative(FerrersBoard(heights), m)
    return rep, tuple(steps)


def equivalence_script(B, B2, m: int) -> FsScript:
    """Forward script of ``B`` followed by the reversed script of ``B2``.

    Both boards are taken without leading zero columns.  Identical boards
    get an empty script.
    """
    a, b = _as_board(B).stripped(), _as_board(B2).stripped()
    if a == b:
        # the script and its reverse would compose to the identity
        return FsScript(a, b, ())
    rep_a, steps_a = _rep(a.heights, m)
    rep_b, steps_b = _rep(b.heights, m)
    if rep_a != rep_b:
        raise NotEquivalent(
            f"{a} and {b} are not {m}-level rook equivalent "
            f"(representatives {rep_a} and {rep_b})",
            (rep_a, rep_b),
        )
    back = tuple(s.reversed() for s in reversed(steps_b))
    return FsScript(a, b, steps_a + back)


def apply_step(step: FsStep, m: int, cells) -> frozenset:
    """Carry cells on ``step.source`` to cells on ``step.target``."""
    cells = _cell_set(cells)
    if step.kind == "to_singleton":
        if step.direction == FORWARD:
            return _to_singleton_cells(step.source, step.target, m, cells, FORWARD)
        return _to_singleton_cells(step.target, step.source, m, cells, BACKWARD)
    if step.direction == FORWARD:
        z = local_l(step.source, m, step.i, step.p).leading_zeros
        moved = _local_l_cells(step.source, m, step.i, step.p, cells, FORWARD)
        return frozenset((c - z, r) for c, r in moved)
    z = local_l(step.target, m, step.i, step.p).leading_zeros
    shifted = frozenset((c + z, r) for c, r in cells)
    return _local_l_cells(step.target, m, step.i, step.p, shifted, BACKWARD)


def transport(B, B2, m: int, pi, trace: list | None = None, check_steps: bool = False) -> Placement:
    """Inversion-preserving bijection from placements on ``B`` to placements on ``B2``.

    If ``trace`` is a list, ``(step, cells)`` pairs are appended for every
    intermediate placement.  ``check_steps`` validates each intermediate
    placement instead of just the endpoints.
    """
    B, B2 = _as_board(B), _as_board(B2)
    cells = validate_placement(B, m, pi).cells
    script = equivalence_script(B, B2, m)
    za, zb = B.leading_zeros, B2.leading_zeros
    cur = frozenset((c - za, r) for c, r in cells)
    for step in script.steps:
        cur = apply_step(step, m, cur)
        if check_steps:
            validate_placement(step.target, m, cur)
        if trace is not None:
            trace.append((step, cur))
    out = frozenset((c + zb, r) for c, r in cur)
    try:
        return validate_placement(B2, m, out)
    except InvalidPlacement as exc:  # pragma: no cover - defect signal
        raise AssertionError(f"transport produced an invalid placement: {exc}") from exc
