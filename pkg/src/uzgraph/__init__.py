"""uzgraph: unit-zero divisor graphs of finite commutative rings."""

from .anatomy import ring_facts
from .config import Limits
from .graph import build_uz
from .invariants import analyze
from .ring import FiniteRing, ring_from_tables, ring_poly_quotient, ring_product, ring_zn
from .ringspec import parse_ring
from .sweep import run_ring, sweep
from .theorems import check_ring, check_zn

__version__ = "0.1.0"

__all__ = [
    "FiniteRing", "Limits", "analyze", "build_uz", "check_ring", "check_zn", "parse_ring",
    "ring_facts", "ring_from_tables", "ring_poly_quotient", "ring_product", "ring_zn",
    "run_ring", "sweep",
]
