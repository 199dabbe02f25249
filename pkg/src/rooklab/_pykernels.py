"""Pure-Python enumeration kernels.

Same contract as the compiled ``_ckernels`` module; selected by
``rooklab._kernels`` when the extension is unavailable.  Every function
here walks individual cells: they are the brute-force oracles the rest of
the package is checked against, so no counting shortcuts.
"""

from __future__ import annotations

from itertools import permutations, product


def rook_numbers(heights, m):
    """Return ``[r_0, ..., r_n]`` for the board by exhaustive placement."""
    heights = [int(h) for h in heights]
    n = len(heights)
    counts = [0] * (n + 1)
    used = set()

    def walk(col, k):
        if col == n:
            counts[k] += 1
            return
        walk(col + 1, k)
        for y in range(1, heights[col] + 1):
            lvl = (y - 1) // m
            if lvl in used:
                continue
            used.add(lvl)
            walk(col + 1, k + 1)
            used.discard(lvl)

    walk(0, 0)
    return counts


def inv(heights, m, rook_rows):
    """m-inversion number; ``rook_rows[c]`` is the rook row in column c+1 or 0."""
    total = 0
    left_levels = set()
    for b, r in zip(heights, rook_rows):
        for y in range(r + 1, b + 1):
            if (y - 1) // m not in left_levels:
                total += 1
        if r:
            left_levels.add((r - 1) // m)
    return total


def inv_distribution(heights, m, k):
    """Map inv value -> number of k-rook m-level placements with that value."""
    heights = [int(h) for h in heights]
    n = len(heights)
    rows = [0] * n
    used = set()
    dist = {}

    def walk(col, left):
        if left == 0:
            v = inv(heights, m, rows)
            dist[v] = dist.get(v, 0) + 1
            return
        if n - col < left:
            return
        walk(col + 1, left)
        for y in range(1, heights[col] + 1):
            lvl = (y - 1) // m
            if lvl in used:
                continue
            used.add(lvl)
            rows[col] = y
            walk(col + 1, left - 1)
            rows[col] = 0
            used.discard(lvl)

    walk(0, k)
    return dist


def hit_vector(heights, m, n):
    """``[h_0, ..., h_n]`` over all of C_m wr S_n; heights padded to n columns."""
    heights = [int(h) for h in heights]
    counts = [0] * (n + 1)
    for sigma in permutations(range(1, n + 1)):
        bases = [(n - p) * m for p in sigma]
        for s in product(range(1, m + 1), repeat=n):
            hits = 0
            for b, base, off in zip(heights, bases, s):
                if base + off <= b:
                    hits += 1
            counts[hits] += 1
    return counts
