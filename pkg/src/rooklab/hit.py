"""Hit numbers over the wreath product C_m wr S_N and the signed sets behind them.

A wreath element ``(s; sigma)`` is drawn as a full m-level placement on the
square board ``Sq_{N,m}``: column ``i`` holds a rook in level
``N + 1 - sigma(i)``, ``s_i`` cells above the bottom of that level.  Boards
are right-aligned inside the square.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial

from . import _kernels
from .board import FerrersBoard, level_of, pad_to
from .errors import DoesNotFit, NotInHitSet
from .fs_bijection import transport
from .gm_engine import SignedSet, gm_transport
from .placement import _cell_set, _placements, rook_numbers
from .polynomial import Polynomial

__all__ = [
    "WreathElement",
    "HitConfig",
    "wreath_elements",
    "wreath_to_placement",
    "placement_to_wreath",
    "is_full_placement",
    "hit_vector",
    "hit_number",
    "hit_set",
    "hit_config_count",
    "enumerate_hit_configs",
    "hit_is_fixed",
    "hit_involution",
    "hit_transfer",
    "hit_signed_set",
    "gm_hit_transport",
    "xi_statistic",
    "q_hit_polynomial",
]


@dataclass(frozen=True)
class WreathElement:
    s: tuple[int, ...]
    sigma: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"s": list(self.s), "sigma": list(self.sigma)}


def wreath_elements(N: int, m: int):
    for sigma in permutations(range(1, N + 1)):
        for s in product(range(1, m + 1), repeat=N):
            yield WreathElement(s, sigma)


def wreath_to_placement(w: WreathElement, m: int) -> frozenset:
    N = len(w.sigma)
    return frozenset((i, (N - p) * m + s) for i, (s, p) in enumerate(zip(w.s, w.sigma), 1))


def placement_to_wreath(cells, N: int, m: int) -> WreathElement:
    by_col = dict(_cell_set(cells))
    s, sigma = [], []
    for i in range(1, N + 1):
        r = by_col[i]
        sigma.append(N + 1 - level_of(r, m))
        s.append(r - (level_of(r, m) - 1) * m)
    return WreathElement(tuple(s), tuple(sigma))


def is_full_placement(cells, N: int, m: int) -> bool:
    cells = _cell_set(cells)
    cols = {c for c, _ in cells}
    lvls = {level_of(r, m) for _, r in cells}
    in_square = all(1 <= c <= N and 1 <= r <= N * m for c, r in cells)
    return in_square and len(cells) == N and len(cols) == N and len(lvls) == N


def _inside(B, N: int, m: int) -> FerrersBoard:
    P = pad_to(B, N)
    if any(h > N * m for h in P.heights):
        raise DoesNotFit(f"board {B} does not fit inside the {N}x{N * m} square")
    return P


def _hits(P: FerrersBoard, cells) -> int:
    h = P.heights
    return sum(1 for c, r in cells if r <= h[c - 1])


def hit_vector(B, m: int, N: int) -> list[int]:
    """``[h_0, ..., h_N]``."""
    P = _inside(B, N, m)
    return list(_kernels.hit_vector(P.heights, m, N))


def hit_number(B, m: int, N: int, k: int) -> int:
    vec = hit_vector(B, m, N)
    return vec[k] if 0 <= k <= N else 0


def hit_set(B, m: int, N: int, k: int) -> list[frozenset]:
    """Full placements meeting ``B`` in exactly ``k`` cells, in wreath-element order."""
    P = _inside(B, N, m)
    out = []
    for w in wreath_elements(N, m):
        cells = wreath_to_placement(w, m)
        if _hits(P, cells) == k:
            out.append(cells)
    return out


# -- signed configurations --------------------------------------------------


@dataclass(frozen=True)
class HitConfig:
    N: int
    m: int
    board: FerrersBoard  # padded to N columns
    k: int
    blacks: frozenset
    circled: frozenset
    whites: frozenset

    @property
    def sign(self) -> int:
        return -1 if len(self.circled) % 2 else 1

    def rooks(self) -> frozenset:
        return self.blacks | self.circled | self.whites

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "m": self.m,
            "board": list(self.board.heights),
            "k": self.k,
            "blacks": [list(c) for c in sorted(self.blacks)],
            "circled": [list(c) for c in sorted(self.circled)],
            "whites": [list(c) for c in sorted(self.whites)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def hit_config_count(B, m: int, N: int, k: int) -> int:
    r = rook_numbers(_inside(B, N, m), m)
    total = 0
    for i in range(N - k + 1):
        rk = r[k + i] if k + i < len(r) else 0
        free = N - k - i
        total += rk * comb(k + i, i) * factorial(free) * m**free
    return total


def _white_fillings(N: int, m: int, taken_cols, taken_levels):
    cols = [c for c in range(1, N + 1) if c not in taken_cols]
    lvls = [p for p in range(1, N + 1) if p not in taken_levels]
    for perm in permutations(lvls):
        for offs in product(range(1, m + 1), repeat=len(cols)):
            yield frozenset((c, (p - 1) * m + o) for c, p, o in zip(cols, perm, offs))


def enumerate_hit_configs(B, m: int, N: int, k: int) -> list[HitConfig]:
    P = _inside(B, N, m)
    out = []
    for i in range(N - k + 1):
        for cells in _placements(P.heights, m, k + i):
            cols = {c for c, _ in cells}
            lvls = {level_of(r, m) for _, r in cells}
            for circ in combinations(cells, i):
                circled = frozenset(circ)
                blacks = frozenset(cells) - circled
                for whites in _white_fillings(N, m, cols, lvls):
                    out.append(HitConfig(N, m, P, k, blacks, circled, whites))
    return out


def hit_is_fixed(c: HitConfig) -> bool:
    return not c.circled and _hits(c.board, c.whites) == 0


def hit_involution(c: HitConfig) -> HitConfig:
    """Swap the leftmost circled rook or white rook inside the board."""
    h = c.board.heights
    for col in range(1, c.N + 1):
        for cell in c.circled:
            if cell[0] == col:
                return HitConfig(c.N, c.m, c.board, c.k, c.blacks, c.circled - {cell}, c.whites | {cell})
        for cell in c.whites:
            if cell[0] == col and cell[1] <= h[col - 1]:
                return HitConfig(c.N, c.m, c.board, c.k, c.blacks, c.circled | {cell}, c.whites - {cell})
    return c


def _reseat(N: int, m: int, src_cells, dst_cells, whites) -> frozenset:
    src_cols = {c for c, _ in src_cells}
    dst_cols = {c for c, _ in dst_cells}
    src_lv = {level_of(r, m) for _, r in src_cells}
    dst_lv = {level_of(r, m) for _, r in dst_cells}
    col_map = dict(
        zip([c for c in range(1, N + 1) if c not in src_cols], [c for c in range(1, N + 1) if c not in dst_cols])
    )
    lv_map = dict(
        zip([p for p in range(1, N + 1) if p not in src_lv], [p for p in range(1, N + 1) if p not in dst_lv])
    )
    out = []
    for c, r in whites:
        q = level_of(r, m)
        out.append((col_map[c], r + (lv_map[q] - q) * m))
    return frozenset(out)


def hit_transfer(c: HitConfig, B2) -> HitConfig:
    """Transport the board rooks to ``B2`` and re-seat circles and whites."""
    P2 = _inside(B2, c.N, c.m)
    on_board = c.blacks | c.circled
    image = transport(c.board, P2, c.m, on_board).cells
    src_rank = sorted(on_board, key=lambda cell: -cell[0])
    dst_rank = sorted(image, key=lambda cell: -cell[0])
    circled_ranks = {j for j, cell in enumerate(src_rank) if cell in c.circled}
    circled = frozenset(cell for j, cell in enumerate(dst_rank) if j in circled_ranks)
    whites = _reseat(c.N, c.m, on_board, image, c.whites)
    return HitConfig(c.N, c.m, P2, c.k, image - circled, circled, whites)


def hit_signed_set(B, m: int, N: int, k: int) -> SignedSet:
    return SignedSet(
        elements=lambda: enumerate_hit_configs(B, m, N, k),
        sign=lambda c: c.sign,
        involution=hit_involution,
        is_fixed=hit_is_fixed,
        size=hit_config_count(B, m, N, k),
    )


def gm_hit_transport(B, B2, m: int, N: int, k: int, r, trace: list | None = None, check: bool = False) -> frozenset:
    """Involution-principle bijection between the k-hit sets of two equivalent boards."""
    P, P2 = _inside(B, N, m), _inside(B2, N, m)
    cells = _cell_set(r)
    if not is_full_placement(cells, N, m) or _hits(P, cells) != k:
        raise NotInHitSet(f"{sorted(cells)} is not in the {k}-hit set of {P}")
    h = P.heights
    blacks = frozenset(cell for cell in cells if cell[1] <= h[cell[0] - 1])
    start = HitConfig(N, m, P, k, blacks, frozenset(), cells - blacks)
    image, tr = gm_transport(
        hit_signed_set(P, m, N, k),
        hit_signed_set(P2, m, N, k),
        lambda c: hit_transfer(c, P2),
        lambda c: hit_transfer(c, P),
        start,
        check=check,
    )
    if trace is not None:
        trace.append(tr)
    return image.rooks()


# -- q-statistic --------------------------------------------------------------


def xi_statistic(B, m: int, N: int, r) -> int:
    """Uncancelled cells of the square under the column and level cancellation rules."""
    P = _inside(B, N, m)
    h = P.heights
    cancelled = set()
    for c, y in _cell_set(r):
        b = h[c - 1]
        if y > b:
            cancelled.update((c, yy) for yy in range(b + 1, y + 1))
        else:
            cancelled.update((c, yy) for yy in range(1, y + 1))
            cancelled.update((c, yy) for yy in range(b + 1, N * m + 1))
        lv = level_of(y, m)
        cancelled.update(
            (cc, yy) for cc in range(c + 1, N + 1) for yy in range((lv - 1) * m + 1, lv * m + 1)
        )
    return N * N * m - len(cancelled)


def q_hit_polynomial(B, m: int, N: int, k: int) -> Polynomial:
    dist: dict[int, int] = {}
    for cells in hit_set(B, m, N, k):
        x = xi_statistic(B, m, N, cells)
        dist[x] = dist.get(x, 0) + 1
    return Polynomial.from_dict(dist, var="q")
