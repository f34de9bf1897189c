"""
Pydantic models for factorizations, length sets and factorization graphs
"""

from typing import Any, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from .errors import IncompleteSet

Vector = Tuple[int, ...]


class Factorization(BaseModel):
    """Exponent vector over the atoms of a monoid"""

    model_config = ConfigDict(frozen=True)

    exponents: Vector = Field(..., description="Nonnegative multiplicity of each atom")

    @computed_field
    @property
    def length(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)


class FactorizationSet(BaseModel):
    """All factorizations of one element, sorted lexicographically"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    element: Any = Field(..., description="The factored element")
    factorizations: Tuple[Factorization, ...] = Field(
        default=(), description="Distinct factorizations in ascending exponent order"
    )
    complete: bool = Field(
        default=True, description="False when the node budget cut the search short"
    )

    def __len__(self) -> int:
        return len(self.factorizations)

    def exponent_vectors(self) -> List[Vector]:
        return [z.exponents for z in self.factorizations]

    def lengths(self) -> List[int]:
        return sorted({z.length for z in self.factorizations})

    def require_complete(self) -> "FactorizationSet":
        if not self.complete:
            raise IncompleteSet(
                f"Factorization set of {self.element!r} is incomplete "
                f"({len(self.factorizations)} found before the budget ran out)"
            )
        return self


class LengthSet(BaseModel):
    """Strictly increasing list of factorization lengths"""

    model_config = ConfigDict(frozen=True)

    lengths: Tuple[int, ...] = Field(..., description="Strictly increasing lengths")

    @classmethod
    def from_mask(cls, mask: int) -> "LengthSet":
        """Build from a bitmask whose bit k is set when length k occurs"""
        lengths = []
        k = 0
        while mask:
            if mask & 1:
                lengths.append(k)
            mask >>= 1
            k += 1
        return cls(lengths=tuple(lengths))

    @property
    def min_len(self) -> int:
        return self.lengths[0]

    @property
    def max_len(self) -> int:
        return self.lengths[-1]

    def __len__(self) -> int:
        return len(self.lengths)

    def __contains__(self, k: int) -> bool:
        return k in self.lengths

    def is_interval(self) -> bool:
        return self.max_len - self.min_len + 1 == len(self.lengths)


class GraphPartition(BaseModel):
    """Connected components of the factorization graph, as index blocks"""

    model_config = ConfigDict(frozen=True)

    blocks: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Disjoint index blocks ordered by their smallest index"
    )

    @property
    def is_disconnected(self) -> bool:
        return len(self.blocks) > 1
