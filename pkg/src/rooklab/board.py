"""Ferrers boards, level geometry and normal forms.

A board is a weakly increasing tuple of column heights, lowest column
first.  Cells are ``(column, row)`` pairs, both 1-based; row ``j`` lies in
level ``ceil(j / m)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering

from .errors import (
    DoesNotFit,
    EmptyIntersection,
    InternalNonTermination,
    NotPermissible,
    NotSingleton,
    RejectsNegative,
    RejectsNonMonotone,
)

__all__ = [
    "INFINITY",
    "FerrersBoard",
    "FsStep",
    "make_board",
    "parse_board",
    "round_to_multiple",
    "level_of",
    "level_counts",
    "is_singleton",
    "singleton_of",
    "l_operator",
    "arm",
    "leg",
    "is_permissible",
    "local_l",
    "is_m_increasing",
    "compare_reversal_lex",
    "root_vector",
    "m_increasing_representative",
    "fits_inside",
    "delta",
    "square",
    "pad_to",
    "ascii_diagram",
]


@total_ordering
class _Infinity:
    """Sentinel for an unbounded arm or leg length."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("rooklab.INFINITY")


INFINITY = _Infinity()


@dataclass(frozen=True)
class FerrersBoard:
    heights: tuple[int, ...] = ()

    def __post_init__(self):
        hs = tuple(int(h) for h in self.heights)
        for h in hs:
            if h < 0:
                raise RejectsNegative(f"negative column height {h}")
        for a, b in zip(hs, hs[1:]):
            if b < a:
                raise RejectsNonMonotone(f"heights {hs} decrease ({a} > {b})")
        object.__setattr__(self, "heights", hs)

    def __len__(self):
        return len(self.heights)

    def __iter__(self):
        return iter(self.heights)

    def __getitem__(self, i):
        return self.heights[i]

    def __str__(self):
        return ",".join(map(str, self.heights))

    @property
    def cells(self) -> int:
        return sum(self.heights)

    @property
    def leading_zeros(self) -> int:
        z = 0
        for h in self.heights:
            if h:
                break
            z += 1
        return z

    def stripped(self) -> "FerrersBoard":
        return FerrersBoard(self.heights[self.leading_zeros:])

    def height(self, i: int) -> int:
        """Height of 1-based column ``i``; 0 outside the board."""
        if 1 <= i <= len(self.heights):
            return self.heights[i - 1]
        return 0

    def contains(self, cell) -> bool:
        c, r = cell
        return r >= 1 and 1 <= c <= len(self.heights) and r <= self.heights[c - 1]

    def cell_list(self):
        return [(c, r) for c, h in enumerate(self.heights, 1) for r in range(1, h + 1)]

    def num_levels(self, m: int) -> int:
        return -(-max(self.heights, default=0) // m)

    def to_json(self) -> str:
        return json.dumps(list(self.heights))


def make_board(heights) -> FerrersBoard:
    return FerrersBoard(tuple(heights))


def parse_board(text: str) -> FerrersBoard:
    """Accept ``"1,3,3,4"`` or a JSON array ``"[1, 3, 3, 4]"``."""
    text = text.strip()
    if text.startswith("["):
        return make_board(json.loads(text))
    if not text:
        return FerrersBoard(())
    return make_board(int(tok) for tok in text.split(","))


def _as_board(B) -> FerrersBoard:
    return B if isinstance(B, FerrersBoard) else make_board(B)


def round_to_multiple(j: int, m: int, direction: str = "up"):
    if j is INFINITY:
        return INFINITY
    if direction == "up":
        return -(-j // m) * m
    if direction == "down":
        return (j // m) * m
    raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")


def level_of(row: int, m: int) -> int:
    return -(-row // m)


def _cells_in_level(h: int, p: int, m: int) -> int:
    return max(0, min(h - (p - 1) * m, m))


def level_counts(B, m: int) -> list[int]:
    B = _as_board(B)
    t = B.num_levels(m)
    return [sum(_cells_in_level(h, p, m) for h in B.heights) for p in range(1, t + 1)]


def is_singleton(B, m: int) -> bool:
    B = _as_board(B)
    partial_levels = [level_of(h, m) for h in B.heights if h % m]
    return len(partial_levels) == len(set(partial_levels))


def singleton_of(B, m: int) -> FerrersBoard:
    """The unique singleton board with the level counts of ``B``.

    Leading zero columns of ``B`` are carried over unchanged.
    """
    B = _as_board(B)
    counts = level_counts(B, m)
    if not counts:
        return B
    width = -(-counts[0] // m)
    from_right = [0] * width
    for lp in counts:
        full, rest = divmod(lp, m)
        for d in range(full):
            from_right[d] += m
        if rest:
            from_right[full] += rest
    return FerrersBoard((0,) * B.leading_zeros + tuple(reversed(from_right)))


def l_operator(B, m: int) -> FerrersBoard:
    return FerrersBoard(tuple(reversed(level_counts(B, m))))


def arm(B, m: int, i: int, p: int):
    B = _as_board(B)
    if i > len(B):
        return INFINITY
    return max(0, B.height(i) - p * m)


def leg(B, m: int, i: int, p: int):
    B = _as_board(B)
    if p == 0:
        return INFINITY
    return sum(_cells_in_level(h, p, m) for h in B.heights[: i - 1])


def _check_meets(B: FerrersBoard, m: int, i: int, p: int):
    if not is_singleton(B, m):
        raise NotSingleton(f"board {B} is not {m}-singleton")
    if not (1 <= i <= len(B) and p >= 1 and B.height(i) > (p - 1) * m):
        raise EmptyIntersection(f"column {i} has no cell in level {p} of {B}")


def _failed_conditions(B, m, i, p):
    failed = []
    if arm(B, m, i, p) > round_to_multiple(leg(B, m, i, p - 1), m, "down"):
        failed.append("arm")
    if leg(B, m, i, p) > round_to_multiple(arm(B, m, i + 1, p), m, "down"):
        failed.append("leg")
    return tuple(failed)


def is_permissible(B, m: int, i: int, p: int) -> bool:
    B = _as_board(B)
    _check_meets(B, m, i, p)
    return not _failed_conditions(B, m, i, p)


def subboard_heights(B, m: int, i: int, p: int) -> tuple[int, ...]:
    """Heights of the part of ``B`` in/above level ``p`` and in/left of column ``i``."""
    base = (p - 1) * m
    return tuple(max(0, h - base) for h in _as_board(B).heights[:i])


def widen_for_local_l(B, m: int, i: int, p: int) -> int:
    """Zero columns to add on the left so the transformed subboard fits.

    Only needed for ``p = 1``, where the l-transform of the subboard can have
    more columns than the ``i`` it replaces.
    """
    width = len(level_counts(subboard_heights(B, m, i, p), m))
    return max(0, width - i)


def local_l(B, m: int, i: int, p: int) -> FerrersBoard:
    """Apply the l-operator to the subboard at ``(i, p)``.

    The result keeps the columns of ``B`` (emptied columns stay as zeros),
    widened on the left by :func:`widen_for_local_l` columns when necessary.
    """
    B = _as_board(B)
    _check_meets(B, m, i, p)
    failed = _failed_conditions(B, m, i, p)
    if failed:
        raise NotPermissible(f"l_{{{i},{p}}} is not permissible for {B}", failed)
    pad = widen_for_local_l(B, m, i, p)
    heights = (0,) * pad + B.heights
    i += pad
    base = (p - 1) * m
    lsub = level_counts(subboard_heights(heights, m, i, p), m)[::-1]
    shift = i - len(lsub)
    new = list(heights)
    for c in range(1, i + 1):
        top = lsub[c - 1 - shift] if c > shift else 0
        new[c - 1] = min(heights[c - 1], base) + top
    return FerrersBoard(tuple(new))


def is_m_increasing(B, m: int) -> bool:
    hs = _as_board(B).stripped().heights
    return all(b - a >= m for a, b in zip(hs, hs[1:]))


def compare_reversal_lex(B, B2) -> int:
    """-1, 0 or 1 as ``B`` is less than, equal to or greater than ``B2``."""
    a = list(reversed(_as_board(B).heights))
    b = list(reversed(_as_board(B2).heights))
    width = max(len(a), len(b))
    a += [0] * (width - len(a))
    b += [0] * (width - len(b))
    return (a > b) - (a < b)


def pad_to(B, N: int) -> FerrersBoard:
    """Strip leading zeros, then left-pad with zeros to exactly ``N`` columns."""
    core = _as_board(B).stripped()
    if len(core) > N:
        raise DoesNotFit(f"board {core} has more than {N} columns")
    return FerrersBoard((0,) * (N - len(core)) + core.heights)


def root_vector(B, m: int, N: int) -> tuple[int, ...]:
    """``(0*m - b_0, 1*m - b_1, ..., (N-1)*m - b_{N-1})`` for ``B`` padded to N columns."""
    padded = pad_to(B, N)
    vec = tuple(k * m - b for k, b in enumerate(padded.heights))
    if any(v < 0 for v in vec):
        raise DoesNotFit(f"board {B} does not fit inside delta({N},{m})")
    return vec


def fits_inside(B, B2) -> bool:
    a = _as_board(B).heights
    b = _as_board(B2).heights
    if len(a) > len(b):
        extra = len(a) - len(b)
        if any(a[:extra]):
            return False
        a = a[extra:]
    b = b[len(b) - len(a):]
    return all(x <= y for x, y in zip(a, b))


def delta(n: int, m: int) -> FerrersBoard:
    return FerrersBoard(tuple(k * m for k in range(n)))


def square(n: int, m: int) -> FerrersBoard:
    return FerrersBoard((n * m,) * n)


# -- normal form search ---------------------------------------------------


@dataclass(frozen=True)
class FsStep:
    """One move of a normal-form script.

    ``kind`` is ``"to_singleton"`` or ``"local_l"``.  A backward step maps
    placements from ``source`` back along the inverse bijection; its
    ``source`` is the forward step's target.
    """

    kind: str
    source: FerrersBoard
    target: FerrersBoard
    i: int | None = None
    p: int | None = None
    direction: str = "forward"

    def reversed(self) -> "FsStep":
        flip = "backward" if self.direction == "forward" else "forward"
        return FsStep(self.kind, self.target, self.source, self.i, self.p, flip)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "direction": self.direction}
        if self.kind == "local_l":
            d["i"], d["p"] = self.i, self.p
        d["source"] = list(self.source.heights)
        d["target"] = list(self.target.heights)
        return d

    def __str__(self):
        name = "ToSingleton" if self.kind == "to_singleton" else f"LocalL({self.i},{self.p})"
        arrow = "->" if self.direction == "forward" else "<-"
        return f"{name} {arrow} ({self.source}) => ({self.target})"


def _find_increase(B: FerrersBoard, m: int):
    """First ``(i', p)`` to apply: levels scanned top-down, columns left to right."""
    for p in range(B.num_levels(m), 0, -1):
        for i in range(1, len(B) + 1):
            if B.height(i) <= (p - 1) * m:
                continue
            if arm(B, m, i, p) < leg(B, m, i, p):
                best = i
                for j in range(i + 1, len(B) + 1):
                    if arm(B, m, j, p) < leg(B, m, j, p):
                        best = j
                return best, p
    return None


def m_increasing_representative(B, m: int, max_steps: int | None = None):
    """Return ``(rep, steps)`` where ``steps`` is a list of forward :class:`FsStep`.

    Leading zero columns are dropped before the search starts.
    """
    cur = _as_board(B).stripped()
    steps: list[FsStep] = []
    if is_m_increasing(cur, m):
        return cur, steps
    target = singleton_of(cur, m)
    if target != cur:
        steps.append(FsStep("to_singleton", cur, target))
        cur = target
    cap = max_steps if max_steps is not None else 4 * (cur.cells + 1) ** 2
    while not is_m_increasing(cur, m):
        if len(steps) > cap:
            raise InternalNonTermination(f"no m-increasing board reached from {B}")
        found = _find_increase(cur, m)
        if found is None:
            raise InternalNonTermination(f"{cur} is not {m}-increasing yet has no increase")
        i, p = found
        nxt = local_l(cur, m, i, p).stripped()
        if compare_reversal_lex(nxt, cur) <= 0:
            raise InternalNonTermination(f"l_{{{i},{p}}} did not increase {cur}")
        steps.append(FsStep("local_l", cur, nxt, i, p))
        cur = nxt
    return cur, steps


def ascii_diagram(B, m: int, cells=(), marks: dict | None = None) -> str:
    """Rows top to bottom; ``R`` marks a rook, ``.`` an empty cell, ``=`` a level boundary."""
    B = _as_board(B)
    rooks = {tuple(c) for c in cells}
    marks = marks or {}
    top = max(B.heights, default=0)
    lines = []
    for r in range(top, 0, -1):
        row = []
        for c in range(1, len(B) + 1):
            if r > B.height(c):
                row.append(" ")
            elif (c, r) in marks:
                row.append(marks[(c, r)])
            else:
                row.append("R" if (c, r) in rooks else ".")
        lines.append("".join(row).rstrip())
        if (r - 1) % m == 0 and r > 1:
            lines.append("=" * len(B))
    return "\n".join(lines)
