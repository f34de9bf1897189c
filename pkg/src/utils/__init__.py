"""
Package initialization for utils
"""

from .number_theory import NumberTheoryUtils
from .rational_utils import RationalUtils
from .graph_utils import DisjointSet
from .rewriting_utils import RewritingUtils
from .parsing_utils import SpecParser
from .config_utils import ConfigManager

__all__ = [
    "NumberTheoryUtils",
    "RationalUtils",
    "DisjointSet",
    "RewritingUtils",
    "SpecParser",
    "ConfigManager",
]
