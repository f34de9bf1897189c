"""
Pydantic model for the command-line report
"""

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class Invocation(BaseModel):
    """Parsed CLI request handed from the parse step to the compute step"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    spec: str = Field(..., description="Monoid spec string as typed")
    kind: Optional[str] = Field(default=None, description="ns, affine, puiseux or block")
    monoid: Any = None
    element: Any = None
    bound: Optional[int] = None
    budget: int
    workers: int = 1
    output_format: Literal["table", "json", "csv"] = "table"
    timing: bool = False
    options: Dict[str, Any] = Field(default_factory=dict)


class ReportFlags(BaseModel):
    """Qualifiers attached to every report"""

    complete: bool = Field(
        default=True, description="Every factorization set used was exhausted"
    )
    under_approximation: bool = Field(
        default=False, description="Scanned unions stand in for monoid-wide values"
    )


class Report(BaseModel):
    """Deterministic result of one CLI invocation; rationals are 'p/q' strings"""

    command: str = Field(..., description="Subcommand that produced the report")
    input: str = Field(..., description="Echo of the monoid spec as given")
    monoid: str = Field(..., description="Normalised label of the monoid")
    results: Dict[str, Any] = Field(
        default_factory=dict, description="Invariant values keyed by name"
    )
    series: Optional[list] = Field(
        default=None, description="Rows of [n, ld] for series commands"
    )
    flags: ReportFlags = Field(default_factory=ReportFlags)
    timing: Optional[float] = Field(
        default=None, description="Wall-clock seconds, only with --timing"
    )
