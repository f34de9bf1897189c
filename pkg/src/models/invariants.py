"""
Pydantic models for invariant results and scan reports
"""

from fractions import Fraction
from typing import Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class LengthStats(BaseModel):
    """Derived invariants of a single length set"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lengths: Tuple[int, ...] = Field(..., description="The length set itself")
    max_len: int = Field(..., description="Largest factorization length")
    min_len: int = Field(..., description="Smallest factorization length")
    elasticity: Fraction = Field(..., description="max_len / min_len")
    delta: Tuple[int, ...] = Field(
        default=(), description="Distinct consecutive gaps, ascending"
    )
    ld: Optional[Fraction] = Field(
        default=None, description="Length density, absent for singleton sets"
    )
    size: int = Field(..., description="Number of distinct lengths")

    @property
    def in_length_ideal(self) -> bool:
        return self.max_len > self.min_len


class DeltaScan(BaseModel):
    """Union of delta sets over a bounded element scan"""

    model_config = ConfigDict(frozen=True)

    bound: int
    delta: Tuple[int, ...] = Field(default=(), description="Ascending union of gaps")
    scanned: int = Field(default=0, description="Elements visited")
    under_approximation: bool = True


class LdSearchReport(BaseModel):
    """Minimum length density over scanned elements, with certificate"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bound: int
    minimum_ld: Fraction
    witness: Any = Field(..., description="First scanned element attaining the minimum")
    witness_lengths: Tuple[int, ...] = ()
    max_delta_seen: int = Field(..., ge=1)
    lower_bound_certificate: Fraction = Field(
        ..., description="1 / max_delta_seen; never exceeds minimum_ld"
    )
    accepted_within_scan: bool
    scanned: int = 0
    stopped_early: bool = Field(
        default=False, description="Scan ended once the known floor was reached"
    )


class BettiLdResult(BaseModel):
    """Whether the minimum scanned length density is attained at a Betti element"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    minimum_ld: Fraction
    certificate: Fraction
    minimum_is_certificate: bool
    betti_elements: Tuple[Any, ...] = ()
    betti_lds: Tuple[Optional[Fraction], ...] = ()
    attained_at_betti: bool
    betti_witness: Optional[Any] = None


class AsymptoticTerm(BaseModel):
    """ld(x^n) for one power"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    ld: Optional[Fraction] = None


class AsymptoticReport(BaseModel):
    """Length densities of successive powers of one element"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: Any
    terms: Tuple[AsymptoticTerm, ...] = ()
    min_delta: Optional[int] = Field(
        default=None, description="Least gap seen among powers and their divisors"
    )
    predicted_limit: Optional[Fraction] = None
    tolerance: Fraction = Fraction(1, 10)
    converged: bool = False
    under_approximation: bool = True


class ElasticityScan(BaseModel):
    """Largest elasticity over a bounded element scan"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bound: int
    maximum: Fraction
    witness: Any
    scanned: int = 0


class SeriesPoint(BaseModel):
    """One checkpoint of a length-density series"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    ld: Optional[Fraction] = None
    min_len: int
    max_len: int
    size: int


class TameDegree(BaseModel):
    """Tame degree of an element at a sub-factorization"""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0, description="Reported tame degree, never 1")
    raw: int = Field(..., ge=0, description="Largest distance to a containing factorization")

    @property
    def adjusted(self) -> bool:
        return self.value != self.raw
