"""
Pydantic models describing the bespoke monoid families
"""

from fractions import Fraction
from math import ceil
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

NOASYM_BASE_ATOMS: Tuple[Fraction, ...] = (
    Fraction(4, 3),
    Fraction(8, 5),
    Fraction(800, 1201),
)
NOASYM_LEVEL_ATOMS: Tuple[Fraction, ...] = (Fraction(23208, 72073),)


class MabcSpec(BaseModel):
    """Parameters of the truncated M(a,b,c) family"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: int = Field(..., description="Lower exponent scale")
    b: int = Field(..., description="Upper exponent scale, b > a")
    c: Fraction = Field(..., description="Target length density in [0, 1]")
    truncation: int = Field(default=1, description="Chains q_{i,*} kept for i <= truncation")

    def k(self, i: int) -> int:
        """k(i) = ceil(i * c * (b - a)), exact"""
        return ceil(i * self.c * (self.b - self.a))

    def chain_exponents(self, i: int) -> Tuple[int, ...]:
        """Indices j of the atoms q_{i,j} taking part in the i-th chain"""
        low = i * self.a
        top = i * self.b
        js = list(range(low, min(low + self.k(i), top) + 1))
        if js[-1] != top:
            js.append(top)
        return tuple(js)


class NoasymSpec(BaseModel):
    """Truncation level of the Puiseux monoid without asymptotic length density"""

    model_config = ConfigDict(frozen=True)

    level: int = Field(default=0, description="Number of extra atoms beyond the base three")

    @property
    def atoms(self) -> Tuple[Fraction, ...]:
        return NOASYM_BASE_ATOMS + NOASYM_LEVEL_ATOMS[: self.level]
