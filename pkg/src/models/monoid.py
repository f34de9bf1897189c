"""
Pydantic models for finitely generated monoid presentations
"""

from fractions import Fraction
from typing import Annotated, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from .group import FiniteAbelianGroup

Vector = Tuple[int, ...]
Relation = Tuple[Vector, Vector]


class NumericalSemigroup(BaseModel):
    """Cofinite submonoid of the naturals given by its minimal generators"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["numerical"] = "numerical"
    generators: Vector = Field(
        ..., description="Minimal generating set, strictly increasing, gcd 1"
    )

    @property
    def atom_count(self) -> int:
        return len(self.generators)

    def label(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"


class AffineSemigroup(BaseModel):
    """Submonoid of N^d generated by a finite list of nonzero vectors"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["affine"] = "affine"
    dimension: int = Field(..., ge=1, description="Ambient dimension d")
    generators: Tuple[Vector, ...] = Field(
        ..., description="Distinct nonzero generator vectors of length d"
    )

    @property
    def atom_count(self) -> int:
        return len(self.generators)

    def label(self) -> str:
        return "<" + ";".join(str(tuple(g)) for g in self.generators) + ">"


class FinitePresentation(BaseModel):
    """Free commutative monoid on atoms modulo a finite list of relations"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["presentation"] = "presentation"
    atom_count: int = Field(..., ge=1, description="Number of atoms")
    relations: Tuple[Relation, ...] = Field(
        default=(), description="Pairs (left word, right word) of exponent vectors"
    )
    weights: Vector = Field(
        ..., description="Positive integer grading consistent with every relation"
    )
    atom_names: Optional[Tuple[str, ...]] = Field(
        default=None, description="Display names of the atoms"
    )

    def name_of(self, index: int) -> str:
        if self.atom_names:
            return self.atom_names[index]
        return f"u{index + 1}"

    def degree(self, word: Vector) -> int:
        return sum(w * e for w, e in zip(self.weights, word))

    def label(self) -> str:
        return f"presentation({self.atom_count} atoms, {len(self.relations)} relations)"


class PuiseuxTruncation(BaseModel):
    """Submonoid of the nonnegative rationals generated by finitely many atoms"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["puiseux"] = "puiseux"
    atoms: Tuple[Fraction, ...] = Field(
        ..., description="Distinct positive rationals in lowest terms, increasing"
    )

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    def label(self) -> str:
        return "<" + ",".join(f"{a.numerator}/{a.denominator}" for a in self.atoms) + ">"


class BlockMonoid(BaseModel):
    """Restriction B(G,S) of the block monoid of a finite abelian group"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["block"] = "block"
    group: FiniteAbelianGroup
    support: Tuple[Vector, ...] = Field(
        ..., description="The allowed subset S as residue vectors"
    )
    atoms: Tuple[Vector, ...] = Field(
        ..., description="Minimal zero-sum sequences as multiplicity vectors over S"
    )
    davenport: int = Field(..., ge=1, description="Davenport constant D(G)")

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    def label(self) -> str:
        subset = ";".join(str(tuple(g)) for g in self.support)
        return f"B({self.group.label()}, {{{subset}}})"


class DirectSum(BaseModel):
    """Coproduct of finitely many presentations"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["direct_sum"] = "direct_sum"
    components: Tuple["MonoidPresentation", ...] = Field(
        ..., description="Summands; elements are tuples of component elements"
    )

    @property
    def atom_count(self) -> int:
        return sum(c.atom_count for c in self.components)

    def label(self) -> str:
        return " + ".join(c.label() for c in self.components)


MonoidPresentation = Annotated[
    Union[
        NumericalSemigroup,
        AffineSemigroup,
        FinitePresentation,
        PuiseuxTruncation,
        BlockMonoid,
        DirectSum,
    ],
    Field(discriminator="kind"),
]

DirectSum.model_rebuild()
