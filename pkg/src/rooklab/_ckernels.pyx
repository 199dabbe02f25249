# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; contract identical to ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free


cdef struct Board:
    int n
    int m
    int *h
    int *rows
    char *used
    int nlevels


cdef int _alloc(Board *bd, heights, int m) except -1:
    cdef int i, top = 0
    bd.n = len(heights)
    bd.m = m
    bd.h = <int *> malloc((bd.n + 1) * sizeof(int))
    bd.rows = <int *> calloc(bd.n + 1, sizeof(int))
    for i in range(bd.n):
        bd.h[i] = heights[i]
        if bd.h[i] > top:
            top = bd.h[i]
    bd.nlevels = (top + m - 1) // m + 1
    bd.used = <char *> calloc(bd.nlevels + 1, sizeof(char))
    if bd.h == NULL or bd.rows == NULL or bd.used == NULL:
        _release(bd)
        raise MemoryError()
    return 0


cdef void _release(Board *bd):
    free(bd.h)
    free(bd.rows)
    free(bd.used)
    bd.h = NULL
    bd.rows = NULL
    bd.used = NULL


cdef long long _inv(Board *bd, char *left):
    cdef int c, y, r, lvl
    cdef long long total = 0
    for lvl in range(bd.nlevels + 1):
        left[lvl] = 0
    for c in range(bd.n):
        r = bd.rows[c]
        for y in range(r + 1, bd.h[c] + 1):
            if not left[(y - 1) // bd.m]:
                total += 1
        if r:
            left[(r - 1) // bd.m] = 1
    return total


cdef void _count(Board *bd, int col, int k, long long *counts):
    cdef int y, lvl
    if col == bd.n:
        counts[k] += 1
        return
    _count(bd, col + 1, k, counts)
    for y in range(1, bd.h[col] + 1):
        lvl = (y - 1) // bd.m
        if bd.used[lvl]:
            continue
        bd.used[lvl] = 1
        _count(bd, col + 1, k + 1, counts)
        bd.used[lvl] = 0


def rook_numbers(heights, int m):
    cdef Board bd
    cdef long long *counts
    _alloc(&bd, heights, m)
    counts = <long long *> calloc(bd.n + 1, sizeof(long long))
    try:
        _count(&bd, 0, 0, counts)
        return [counts[i] for i in range(bd.n + 1)]
    finally:
        free(counts)
        _release(&bd)


def inv(heights, int m, rook_rows):
    cdef Board bd
    cdef char *left
    cdef int i
    _alloc(&bd, heights, m)
    left = <char *> calloc(bd.nlevels + 1, sizeof(char))
    try:
        for i in range(bd.n):
            bd.rows[i] = rook_rows[i]
        return _inv(&bd, left)
    finally:
        free(left)
        _release(&bd)


cdef void _dist(Board *bd, int col, int left, char *scratch, long long *hist):
    cdef int y, lvl
    if left == 0:
        hist[_inv(bd, scratch)] += 1
        return
    if bd.n - col < left:
        return
    _dist(bd, col + 1, left, scratch, hist)
    for y in range(1, bd.h[col] + 1):
        lvl = (y - 1) // bd.m
        if bd.used[lvl]:
            continue
        bd.used[lvl] = 1
        bd.rows[col] = y
        _dist(bd, col + 1, left - 1, scratch, hist)
        bd.rows[col] = 0
        bd.used[lvl] = 0


def inv_distribution(heights, int m, int k):
    cdef Board bd
    cdef char *scratch
    cdef long long *hist
    cdef int i, cells = 0
    _alloc(&bd, heights, m)
    for i in range(bd.n):
        cells += bd.h[i]
    scratch = <char *> calloc(bd.nlevels + 1, sizeof(char))
    hist = <long long *> calloc(cells + 1, sizeof(long long))
    try:
        _dist(&bd, 0, k, scratch, hist)
        return {i: hist[i] for i in range(cells + 1) if hist[i]}
    finally:
        free(scratch)
        free(hist)
        _release(&bd)


cdef void _hits(int *h, int n, int m, int col, int hits, char *used, long long *counts):
    cdef int p, s, row
    if col == n:
        counts[hits] += 1
        return
    for p in range(n):
        if used[p]:
            continue
        used[p] = 1
        for s in range(1, m + 1):
            row = p * m + s
            _hits(h, n, m, col + 1, hits + (row <= h[col]), used, counts)
        used[p] = 0


def hit_vector(heights, int m, int n):
    cdef int *h = <int *> malloc((n + 1) * sizeof(int))
    cdef char *used = <char *> calloc(n + 1, sizeof(char))
    cdef long long *counts = <long long *> calloc(n + 1, sizeof(long long))
    cdef int i
    try:
        if h == NULL or used == NULL or counts == NULL:
            raise MemoryError()
        for i in range(n):
            h[i] = heights[i]
        _hits(h, n, m, 0, 0, used, counts)
        return [counts[i] for i in range(n + 1)]
    finally:
        free(h)
        free(used)
        free(counts)
