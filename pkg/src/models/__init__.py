"""
Package initialization for models
"""

# Error hierarchy
from .errors import (
    ToolkitError,
    InputError,
    EmptyGenerators,
    InvalidGenerator,
    NonCoprime,
    DimensionMismatch,
    ZeroVector,
    MalformedRelation,
    NoPositiveGrading,
    NonAtomicGenerator,
    TagMismatch,
    NotInMonoid,
    IndexSpaceMismatch,
    InvalidSpec,
    InvalidIndex,
    InvalidLevel,
    InvalidGroup,
    ParseError,
    NoLdElements,
    BudgetExceeded,
    IncompleteSet,
)

# Monoid presentations
from .group import FiniteAbelianGroup, ZeroSumSequence
from .monoid import (
    NumericalSemigroup,
    AffineSemigroup,
    FinitePresentation,
    PuiseuxTruncation,
    BlockMonoid,
    DirectSum,
    MonoidPresentation,
)

# Factorization and invariant results
from .factorization import Factorization, FactorizationSet, LengthSet, GraphPartition
from .invariants import (
    LengthStats,
    DeltaScan,
    LdSearchReport,
    BettiLdResult,
    AsymptoticTerm,
    AsymptoticReport,
    ElasticityScan,
    SeriesPoint,
    TameDegree,
)
from .constructions import MabcSpec, NoasymSpec

# Configuration and CLI output
from .config import ToolkitConfig, ScanBoundsConfig, AsymptoticConfig
from .report import Invocation, Report, ReportFlags

__all__ = [
    # Errors
    "ToolkitError",
    "InputError",
    "EmptyGenerators",
    "InvalidGenerator",
    "NonCoprime",
    "DimensionMismatch",
    "ZeroVector",
    "MalformedRelation",
    "NoPositiveGrading",
    "NonAtomicGenerator",
    "TagMismatch",
    "NotInMonoid",
    "IndexSpaceMismatch",
    "InvalidSpec",
    "InvalidIndex",
    "InvalidLevel",
    "InvalidGroup",
    "ParseError",
    "NoLdElements",
    "BudgetExceeded",
    "IncompleteSet",
    # Presentations
    "FiniteAbelianGroup",
    "ZeroSumSequence",
    "NumericalSemigroup",
    "AffineSemigroup",
    "FinitePresentation",
    "PuiseuxTruncation",
    "BlockMonoid",
    "DirectSum",
    "MonoidPresentation",
    # Results
    "Factorization",
    "FactorizationSet",
    "LengthSet",
    "GraphPartition",
    "LengthStats",
    "DeltaScan",
    "LdSearchReport",
    "BettiLdResult",
    "AsymptoticTerm",
    "AsymptoticReport",
    "ElasticityScan",
    "SeriesPoint",
    "TameDegree",
    "MabcSpec",
    "NoasymSpec",
    # Config and CLI
    "ToolkitConfig",
    "ScanBoundsConfig",
    "AsymptoticConfig",
    "Invocation",
    "Report",
    "ReportFlags",
]
