"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit

from rooklab import _pykernels

try:
    from rooklab import _ckernels
except ImportError:  # extension not built
    _ckernels = None

CASES = [
    ("rook_numbers", "rook_numbers", ((1, 2, 3, 4, 5, 6, 7, 8, 9), 1)),
    ("rook_numbers", "rook_numbers", ((2, 3, 3, 4, 7, 8, 10, 10, 12, 12), 3)),
    ("inv_distribution k=3", "inv_distribution", ((2, 3, 3, 4, 7, 8, 10, 10), 3, 3)),
    ("inv_distribution k=4", "inv_distribution", ((1, 2, 3, 4, 5, 6, 7), 1, 4)),
    ("hit_vector N=5 m=2", "hit_vector", ((0, 1, 3, 5, 8), 2, 5)),
    ("hit_vector N=6 m=2", "hit_vector", ((0, 1, 3, 5, 8, 10), 2, 6)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"{'kernel':<24}{'args':<44}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for label, name, call in CASES:
        py = getattr(_pykernels, name)
        t_py = min(timeit.repeat(lambda: py(*call), number=1, repeat=args.repeat))
        if _ckernels is None:
            t_c, ratio = float("nan"), "n/a"
        else:
            cy = getattr(_ckernels, name)
            if cy(*call) != py(*call):
                raise SystemExit(f"backends disagree on {name}{call}")
            t_c = min(timeit.repeat(lambda: cy(*call), number=1, repeat=args.repeat))
            ratio = f"{t_py / t_c:8.1f}x"
        print(f"{label:<24}{str(call):<44}{t_py:10.4f}{t_c:10.4f}{ratio:>9}")


if __name__ == "__main__":
    main()
