"""Signed white/black rook configurations on a triangular board.

For a singleton board ``B`` sitting in the southeast corner of the
triangle ``Δ_{N,m} = (0, m, ..., (N-1)m)`` this module builds the signed set
whose fixed points are the k-placements on ``B``, the sign-reversing
involution on it, the sign-preserving transfer to an equivalent board, and
the closed-form rook count that falls out of the signed sum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from . import _kernels
from .board import FerrersBoard, _as_board, is_singleton, level_of, pad_to, root_vector
from .errors import BudgetTooLarge, DegreeTooLarge, DoesNotFit, NotEquivalent, NotSingleton
from .gm_engine import SignedSet, gm_transport
from .placement import Placement, _placements, validate_placement

__all__ = [
    "RookConfig",
    "stirling2",
    "elementary_symmetric",
    "smallest_triangle",
    "rook_count_formula",
    "config_count",
    "enumerate_configs",
    "involution_I",
    "is_fixed",
    "ainv",
    "transfer_f",
    "rook_signed_set",
    "embed_placement",
    "gm_rook_transport",
]


@dataclass(frozen=True)
class RookConfig:
    N: int
    m: int
    board: FerrersBoard  # padded to N columns
    whites: frozenset
    blacks: frozenset
    k: int

    @property
    def sign(self) -> int:
        return -1 if len(self.whites) % 2 else 1

    @property
    def i(self) -> int:
        return len(self.whites)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "m": self.m,
            "board": list(self.board.heights),
            "whites": [list(c) for c in sorted(self.whites)],
            "blacks": [list(c) for c in sorted(self.blacks)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=None)
def stirling2(n: int, d: int) -> int:
    """Set partitions of ``n`` elements into ``d`` blocks."""
    if n == d:
        return 1
    if d == 0 or d > n:
        return 0
    return d * stirling2(n - 1, d) + stirling2(n - 1, d - 1)


def elementary_symmetric(d: int, values) -> int:
    values = list(values)
    if d < 0 or d > len(values):
        raise DegreeTooLarge(f"degree {d} exceeds the {len(values)} available values")
    e = [1] + [0] * d
    for v in values:
        for j in range(d, 0, -1):
            e[j] += e[j - 1] * v
    return e[d]


def _prepare(B, m: int, N: int) -> FerrersBoard:
    P = pad_to(B, N)
    if not is_singleton(P, m):
        raise NotSingleton(f"board {P} is not {m}-singleton")
    root_vector(P, m, N)  # raises DoesNotFit outside the triangle
    return P


def smallest_triangle(boards, m: int, k: int = 0) -> int:
    """Least N > k such that every board fits inside the triangle with N columns."""
    cores = [_as_board(B).stripped() for B in boards]
    N = max([k + 1] + [len(B) for B in cores])
    while True:
        try:
            for B in cores:
                root_vector(B, m, N)
            return N
        except DoesNotFit:
            N += 1


def rook_count_formula(B, m: int, N: int, k: int) -> int:
    """Rook number from the signed sum over white-rook strata."""
    P = _prepare(B, m, N)
    if k >= N:
        raise BudgetTooLarge(f"need k < N, got k={k}, N={N}")
    roots = root_vector(P, m, N)
    return sum(
        (-1) ** i * m ** (k - i) * stirling2(N - i, N - k) * elementary_symmetric(i, roots)
        for i in range(k + 1)
    )


def config_count(B, m: int, N: int, k: int) -> int:
    """Unsigned size of the configuration set."""
    P = _prepare(B, m, N)
    roots = root_vector(P, m, N)
    return sum(
        m ** (k - i) * stirling2(N - i, N - k) * elementary_symmetric(i, roots)
        for i in range(k + 1)
    )


def _free_columns(N: int, whites) -> list[int]:
    taken = {c for c, _ in whites}
    return [c for c in range(1, N + 1) if c not in taken]


def enumerate_configs(B, m: int, N: int, k: int) -> list[RookConfig]:
    """Every configuration, ordered by number of whites, then whites, then blacks."""
    P = _prepare(B, m, N)
    if k >= N:
        raise BudgetTooLarge(f"need k < N, got k={k}, N={N}")
    h = P.heights
    outside = [c for c in range(1, N + 1) if (c - 1) * m > h[c - 1]]
    out = []
    for i in range(k + 1):
        inset = tuple(j * m for j in range(N - i))
        for cols in combinations(outside, i):
            for rows in product(*[range(h[c - 1] + 1, (c - 1) * m + 1) for c in cols]):
                whites = frozenset(zip(cols, rows))
                free = _free_columns(N, whites)
                for cells in _placements(inset, m, k - i):
                    blacks = frozenset((free[c - 1], r) for c, r in cells)
                    out.append(RookConfig(N, m, P, whites, blacks, k))
    return out


def is_fixed(c: RookConfig) -> bool:
    h = c.board.heights
    return not c.whites and all(r <= h[col - 1] for col, r in c.blacks)


def involution_I(c: RookConfig) -> RookConfig:
    """Toggle the leftmost rook lying outside the board; identity on fixed points."""
    h = c.board.heights
    m = c.m
    white_at = {col: r for col, r in c.whites}
    black_at = {col: r for col, r in c.blacks}
    for col in range(1, c.N + 1):
        if col in white_at:
            r = white_at[col]
            lv = level_of(r, m)
            blacks = {
                (x, y + m) if x > col and level_of(y, m) >= lv else (x, y)
                for x, y in c.blacks
            }
            blacks.add((col, r))
            return RookConfig(c.N, m, c.board, c.whites - {(col, r)}, frozenset(blacks), c.k)
        if col in black_at and black_at[col] > h[col - 1]:
            r = black_at[col]
            lv = level_of(r, m)
            blacks = {
                (x, y - m) if x > col and level_of(y, m) > lv else (x, y)
                for x, y in c.blacks
                if x != col
            }
            return RookConfig(c.N, m, c.board, c.whites | {(col, r)}, frozenset(blacks), c.k)
    return c


def ainv(c: RookConfig) -> int:
    """Inset inversion number of the blacks plus the cells above each white."""
    m = c.m
    free = _free_columns(c.N, c.whites)
    ordinal = {col: j for j, col in enumerate(free, 1)}
    inset = tuple(j * m for j in range(len(free)))
    rows = [0] * len(free)
    for col, r in c.blacks:
        rows[ordinal[col] - 1] = r
    above = sum((col - 1) * m - r for col, r in c.whites)
    return _kernels.inv(inset, m, rows) + above


def _column_pairing(src: FerrersBoard, dst: FerrersBoard, m: int, N: int) -> dict[int, int]:
    a, b = root_vector(src, m, N), root_vector(dst, m, N)
    if sorted(a) != sorted(b):
        raise NotEquivalent(f"root vectors of {src} and {dst} differ for N={N}")
    buckets: dict[int, list[int]] = {}
    for col, v in enumerate(b, 1):
        buckets.setdefault(v, []).append(col)
    pairing = {}
    for col, v in enumerate(a, 1):
        pairing[col] = buckets[v].pop(0)
    return pairing


def transfer_f(c: RookConfig, B2) -> RookConfig:
    """Sign- and ainv-preserving map onto configurations over ``B2``."""
    P2 = _prepare(B2, c.m, c.N)
    pairing = _column_pairing(c.board, P2, c.m, c.N)
    h, h2 = c.board.heights, P2.heights
    whites = frozenset(
        (pairing[col], h2[pairing[col] - 1] + (r - h[col - 1])) for col, r in c.whites
    )
    old_free = _free_columns(c.N, c.whites)
    new_free = _free_columns(c.N, whites)
    seat = dict(zip(old_free, new_free))
    blacks = frozenset((seat[col], r) for col, r in c.blacks)
    return RookConfig(c.N, c.m, P2, whites, blacks, c.k)


def rook_signed_set(B, m: int, N: int, k: int) -> SignedSet:
    return SignedSet(
        elements=lambda: enumerate_configs(B, m, N, k),
        sign=lambda c: c.sign,
        involution=involution_I,
        is_fixed=is_fixed,
        size=config_count(B, m, N, k),
    )


def embed_placement(B, m: int, N: int, pi) -> RookConfig:
    """The fixed configuration whose blacks are ``pi`` (columns shifted to the padded board)."""
    B = _as_board(B)
    P = _prepare(B, m, N)
    shift = N - len(B)
    cells = validate_placement(B, m, pi).cells
    blacks = frozenset((c + shift, r) for c, r in cells)
    return RookConfig(N, m, P, frozenset(), blacks, len(blacks))


def gm_rook_transport(B, B2, m: int, N: int, k: int, pi, trace: list | None = None, check: bool = False) -> Placement:
    """Involution-principle bijection from k-placements on ``B`` to those on ``B2``."""
    B, B2 = _as_board(B), _as_board(B2)
    start = embed_placement(B, m, N, pi)
    if start.k != k:
        raise ValueError(f"placement has {start.k} rooks, expected {k}")
    P2 = _prepare(B2, m, N)
    _column_pairing(start.board, P2, m, N)
    source = rook_signed_set(B, m, N, k)
    target = rook_signed_set(B2, m, N, k)
    image, tr = gm_transport(
        source,
        target,
        lambda c: transfer_f(c, P2),
        lambda c: transfer_f(c, start.board),
        start,
        check=check,
    )
    if trace is not None:
        trace.append(tr)
    shift = N - len(B2)
    return Placement(B2, m, frozenset((c - shift, r) for c, r in image.blacks))
