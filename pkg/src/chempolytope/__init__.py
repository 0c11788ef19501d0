"""Edge-type polytopes of chemical graphs with maximum degree 3."""

__version__ = "0.1.0"

from .core import (ChemPolytopeError, EdgeTypeVector, IndexSpec, InvalidOrderSize, OrderSize,
                   Point3, PolytopeDescription)
from .engine import build_polytope
from .builder import build_witness
from .optimize import get_index, optimize
from .realizability import check_point

__all__ = [
    "ChemPolytopeError", "EdgeTypeVector", "IndexSpec", "InvalidOrderSize", "OrderSize",
    "Point3", "PolytopeDescription", "build_polytope", "build_witness", "check_point",
    "get_index", "optimize",
]
