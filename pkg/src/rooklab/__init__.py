"""m-level rook theory on Ferrers boards."""

from ._kernels import BACKEND
from .board import FerrersBoard, INFINITY, make_board, parse_board
from .placement import Placement
from .polynomial import Polynomial

__all__ = ["BACKEND", "FerrersBoard", "INFINITY", "Placement", "Polynomial", "make_board", "parse_board"]
__version__ = "0.1.0"
