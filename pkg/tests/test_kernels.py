"""Compiled and pure-Python kernels agree with each other and with the oracles."""

import os
from itertools import permutations

import pytest
from hypothesis import given

import oracles
from conftest import boards, ms
from rooklab import _kernels, _pykernels

try:
    from rooklab import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])


def test_backend_flag_matches_loaded_module():
    assert _kernels.BACKEND in ("cython", "python")
    forced = bool(os.environ.get("ROOKLAB_PURE_PYTHON"))
    if _ckernels is not None and not forced:
        assert _kernels.BACKEND == "cython"
    if forced:
        assert _kernels.BACKEND == "python"


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("heights,m", [((1, 3, 3, 4), 2), ((0, 0, 2, 3), 2), ((2, 3, 3, 4, 7, 8, 10, 10), 3), ((5,), 1)])
def test_rook_numbers_against_oracle(impl, heights, m):
    got = impl.rook_numbers(heights, m)
    want = oracles.rook_numbers(heights, m)
    assert got[: len(want)] == want and not any(got[len(want):])


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_inv_distribution_against_oracle(impl):
    for heights, m in [((1, 3, 3, 4), 2), ((1, 1, 1, 6, 7), 2), ((2, 2, 5), 3)]:
        for k in range(4):
            assert impl.inv_distribution(heights, m, k) == oracles.inv_distribution(heights, m, k)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_hit_vector_against_oracle(impl):
    for heights, m, N in [((0, 1, 2, 4), 2, 4), ((1, 2, 4), 3, 3), ((0, 0, 3), 1, 3)]:
        assert list(impl.hit_vector(heights, m, N)) == oracles.hit_vector(heights, m, N)


@given(boards(max_cols=5, max_height=7), ms)
def test_backends_agree_on_random_boards(heights, m):
    if _ckernels is None:
        pytest.skip("extension not built")
    assert _ckernels.rook_numbers(heights, m) == _pykernels.rook_numbers(heights, m)
    for k in range(3):
        assert _ckernels.inv_distribution(heights, m, k) == _pykernels.inv_distribution(heights, m, k)


@given(boards(max_cols=4, max_height=6), ms)
def test_inv_kernel_against_oracle(heights, m):
    for k in range(3):
        for p in oracles.placements(heights, m, k):
            rows = [0] * len(heights)
            for c, r in p:
                rows[c - 1] = r
            want = oracles.inv(heights, m, p)
            for impl in BACKENDS:
                assert impl.inv(heights, m, rows) == want


def test_hit_vector_total_is_group_order():
    for impl in BACKENDS:
        for perm_n, m in [(3, 2), (4, 1)]:
            vec = impl.hit_vector((0,) * (perm_n - 1) + (perm_n * m,), m, perm_n)
            assert sum(vec) == m**perm_n * len(list(permutations(range(perm_n))))
