"""
Package initialization for engines
"""

from .lattice_search import LatticeSearch, SearchOutcome
from .length_oracle import LengthOracle
from .monoid_core import MonoidBuilder
from .factor_engine import FactorEngine
from .invariants import InvariantCalculator
from .block_monoid import BlockMonoidUtils
from .constructions import ConstructionFactory, NOASYM_BASE

__all__ = [
    "LatticeSearch",
    "SearchOutcome",
    "LengthOracle",
    "MonoidBuilder",
    "FactorEngine",
    "InvariantCalculator",
    "BlockMonoidUtils",
    "ConstructionFactory",
    "NOASYM_BASE",
]
