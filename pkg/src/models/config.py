"""
Pydantic models for configuration data
"""

from typing import Optional

from pydantic import BaseModel, Field


class ScanBoundsConfig(BaseModel):
    """Default scan bounds per monoid kind"""

    numerical: int = Field(default=500, ge=1, description="Largest natural scanned")
    affine: int = Field(default=60, ge=1, description="Largest coordinate sum scanned")
    puiseux: int = Field(default=12, ge=1, description="Most atoms per scanned sum")
    presentation_factor: int = Field(
        default=2, ge=1, description="Multiple of the largest relation degree"
    )
    block_factor: int = Field(
        default=2, ge=1, description="Multiple of the Davenport constant"
    )


class AsymptoticConfig(BaseModel):
    """Defaults for power-series length density runs"""

    terms: int = Field(default=10, ge=1, description="Number of powers computed")
    tolerance: str = Field(default="1/10", description="Convergence tolerance as p/q")


class ToolkitConfig(BaseModel):
    """Toolkit configuration"""

    budget: int = Field(
        default=5_000_000, ge=1, description="Node expansions allowed per search"
    )
    workers: int = Field(default=1, ge=1, description="Threads used for element scans")
    bounds: ScanBoundsConfig = Field(default_factory=ScanBoundsConfig)
    asymptotic: AsymptoticConfig = Field(default_factory=AsymptoticConfig)
    source: Optional[str] = Field(default=None, description="File the values came from")
