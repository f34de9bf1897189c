"""
Pydantic models for finite abelian groups and zero-sum sequences
"""

from collections import defaultdict
from itertools import product
from math import prod
from typing import Dict, Iterable, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field
from sympy import factorint

from .errors import DimensionMismatch, InvalidGroup, NotInMonoid

Vector = Tuple[int, ...]


class FiniteAbelianGroup(BaseModel):
    """Z_{n_1} + ... + Z_{n_k} in invariant-factor form (n_i | n_{i+1})"""

    model_config = ConfigDict(frozen=True)

    invariant_factors: Vector = Field(
        default=(), description="Divisibility chain of factors >= 2; empty means trivial"
    )

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def zero(self) -> Vector:
        return tuple(0 for _ in self.invariant_factors)

    def reduce(self, residues) -> Vector:
        return tuple(int(r) % n for r, n in zip(residues, self.invariant_factors))

    def add(self, g: Vector, h: Vector) -> Vector:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.invariant_factors))

    def negate(self, g: Vector) -> Vector:
        return tuple((-a) % n for a, n in zip(g, self.invariant_factors))

    def scale(self, g: Vector, k: int) -> Vector:
        return tuple((a * k) % n for a, n in zip(g, self.invariant_factors))

    def elements(self) -> Iterator[Vector]:
        """All elements in lexicographic residue order"""
        return product(*(range(n) for n in self.invariant_factors))

    def label(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return "x".join(f"Z{n}" for n in self.invariant_factors)

    @classmethod
    def from_cyclic_factors(cls, orders: Iterable[int]) -> "FiniteAbelianGroup":
        """Normalise a product of cyclic groups to invariant-factor form"""
        prime_powers: Dict[int, List[int]] = defaultdict(list)
        for n in orders:
            if n < 1:
                raise InvalidGroup(f"Cyclic factor order must be positive, got {n}")
            for p, e in factorint(n).items():
                prime_powers[int(p)].append(int(p) ** int(e))

        rank = max((len(v) for v in prime_powers.values()), default=0)
        factors = [1] * rank
        # The j-th largest power of every prime goes into the j-th largest factor
        for powers in prime_powers.values():
            for j, q in enumerate(sorted(powers, reverse=True)):
                factors[rank - 1 - j] *= q
        return cls(invariant_factors=tuple(factors))


class ZeroSumSequence(BaseModel):
    """Multiset over a subset S of a group whose weighted sum is zero"""

    model_config = ConfigDict(frozen=True)

    support: Tuple[Vector, ...] = Field(..., description="The allowed subset S")
    multiplicities: Vector = Field(..., description="Multiplicity of each support element")

    @property
    def length(self) -> int:
        return sum(self.multiplicities)

    def total(self, group: FiniteAbelianGroup) -> Vector:
        result = group.zero()
        for g, k in zip(self.support, self.multiplicities):
            result = group.add(result, group.scale(g, k))
        return result

    @classmethod
    def over(
        cls, group: FiniteAbelianGroup, support: Iterable[Vector], multiplicities: Iterable[int]
    ) -> "ZeroSumSequence":
        """Build a sequence and check that it sums to zero in `group`"""
        sequence = cls(support=tuple(support), multiplicities=tuple(multiplicities))
        if len(sequence.support) != len(sequence.multiplicities):
            raise DimensionMismatch(
                f"{len(sequence.multiplicities)} multiplicities for {len(sequence.support)} support elements"
            )
        if sequence.total(group) != group.zero():
            raise NotInMonoid(
                f"{sequence.render()} sums to {sequence.total(group)} in {group.label()}, not zero"
            )
        return sequence

    def render(self) -> str:
        parts = []
        for g, k in zip(self.support, self.multiplicities):
            if k == 0:
                continue
            # Bare residues only lead; later ones need parentheses to stay parseable
            if len(g) == 1 and not parts:
                token = str(g[0])
            else:
                token = "(" + ",".join(map(str, g)) + ")"
            parts.append(token if k == 1 else f"{token}^{k}")
        return "".join(parts) if parts else "1"
