"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; setting
``ROOKLAB_PURE_PYTHON=1`` forces the pure-Python implementation.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("ROOKLAB_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

rook_numbers = _impl.rook_numbers
inv = _impl.inv
inv_distribution = _impl.inv_distribution
hit_vector = _impl.hit_vector
