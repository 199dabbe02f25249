"""Slow, direct reference implementations used to derive expected values.

Nothing here imports rooklab: each function follows the textbook
definition cell by cell so it can serve as an independent check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial


def level(row, m):
    return (row - 1) // m + 1


def cells(heights):
    return [(c, r) for c, h in enumerate(heights, 1) for r in range(1, h + 1)]


def placements(heights, m, k):
    """All k-subsets of cells with distinct columns and distinct levels."""
    out = []
    for subset in combinations(cells(heights), k):
        if len({c for c, _ in subset}) == k and len({level(r, m) for _, r in subset}) == k:
            out.append(frozenset(subset))
    return out


def rook_numbers(heights, m):
    cols = sum(1 for h in heights if h)
    levels = level(max(heights), m) if cols else 0
    counts = [len(placements(heights, m, k)) for k in range(min(cols, levels) + 1)]
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def inv(heights, m, rooks):
    rooks = set(rooks)
    total = 0
    for c, y in cells(heights):
        if (c, y) in rooks:
            continue
        if any(rc == c and ry > y for rc, ry in rooks):
            continue
        if any(rc < c and level(ry, m) == level(y, m) for rc, ry in rooks):
            continue
        total += 1
    return total


def inv_distribution(heights, m, k):
    dist = {}
    for p in placements(heights, m, k):
        v = inv(heights, m, p)
        dist[v] = dist.get(v, 0) + 1
    return dict(sorted(dist.items()))


def stirling2(n, d):
    """Inclusion-exclusion formula."""
    total = sum((-1) ** j * comb(d, j) * (d - j) ** n for j in range(d + 1))
    return total // factorial(d)


def elementary_symmetric(d, values):
    total = 0
    for subset in combinations(values, d):
        prod = 1
        for v in subset:
            prod *= v
        total += prod
    return total


def full_placements(N, m):
    """Each colored permutation as a set of rooks on the N x Nm square."""
    for sigma in permutations(range(1, N + 1)):
        for s in product(range(1, m + 1), repeat=N):
            yield frozenset((i + 1, (N - sigma[i]) * m + s[i]) for i in range(N))


def hit_vector(heights, m, N):
    heights = (0,) * (N - len(heights)) + tuple(heights)
    vec = [0] * (N + 1)
    for rooks in full_placements(N, m):
        vec[sum(1 for c, r in rooks if r <= heights[c - 1])] += 1
    return vec


def xi(heights, m, N, rooks):
    heights = (0,) * (N - len(heights)) + tuple(heights)
    rooks = set(rooks)
    alive = 0
    for c in range(1, N + 1):
        for y in range(1, N * m + 1):
            if (c, y) in rooks:
                continue
            dead = False
            for rc, ry in rooks:
                inside = ry <= heights[rc - 1]
                if rc == c:
                    outside_cell = y > heights[c - 1]
                    if inside and (y <= ry or outside_cell):
                        dead = True
                    if not inside and y <= ry and outside_cell:
                        dead = True
                if rc < c and level(ry, m) == level(y, m):
                    dead = True
            alive += not dead
    return alive


def xi_distribution(heights, m, N, k):
    padded = (0,) * (N - len(heights)) + tuple(heights)
    dist = {}
    for rooks in full_placements(N, m):
        if sum(1 for c, r in rooks if r <= padded[c - 1]) == k:
            v = xi(heights, m, N, rooks)
            dist[v] = dist.get(v, 0) + 1
    return dict(sorted(dist.items()))


def poly_from_roots(constants):
    """Coefficients (lowest first) of prod (x + a) over ``constants``."""
    coeffs = [1]
    for a in constants:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += a * c
            nxt[i + 1] += c
        coeffs = nxt
    return coeffs


def interpolate(points):
    """Lagrange interpolation through integer points, exact."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi_, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi_ - xj
        for t in range(n):
            coeffs[t] += yi * basis[t] / denom
    out = [int(c) for c in coeffs]
    assert all(Fraction(o) == c for o, c in zip(out, coeffs))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
