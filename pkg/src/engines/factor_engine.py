"""
Factorization sets, length sets, distances and factorization graphs
"""

import logging
from itertools import product
from typing import Optional, Sequence, Union

from models.errors import BudgetExceeded, IndexSpaceMismatch, NotInMonoid, TagMismatch
from models.factorization import Factorization, FactorizationSet, GraphPartition, LengthSet
from models.monoid import (
    AffineSemigroup,
    BlockMonoid,
    DirectSum,
    FinitePresentation,
    NumericalSemigroup,
    PuiseuxTruncation,
)
from engines.lattice_search import LatticeSearch
from engines.length_oracle import LengthOracle
from engines.monoid_core import MonoidBuilder
from utils.graph_utils import DisjointSet
from utils.number_theory import NumberTheoryUtils
from utils.rewriting_utils import RewritingUtils

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000

FactorizationLike = Union[Factorization, Sequence[int]]


class FactorEngine:
    """Utility class for factorization-level computations on any presentation"""

    @staticmethod
    def factorizations(monoid, x, budget: Optional[int] = None) -> FactorizationSet:
        """Z(x), sorted ascending; complete=False when the budget ran out"""
        budget = budget or DEFAULT_BUDGET
        x = MonoidBuilder.coerce_element(monoid, x)

        if isinstance(monoid, DirectSum):
            parts = [
                FactorEngine.factorizations(c, part, budget)
                for c, part in zip(monoid.components, x)
            ]
            vectors = sorted(
                sum(combo, ())
                for combo in product(*(p.exponent_vectors() for p in parts))
            )
            return FactorizationSet(
                element=x,
                factorizations=tuple(Factorization(exponents=v) for v in vectors),
                complete=all(p.complete for p in parts),
            )

        if isinstance(monoid, FinitePresentation):
            if any(e < 0 for e in x):
                raise NotInMonoid(f"{x} has a negative exponent")
            members, complete = RewritingUtils.closure(monoid.relations, x, budget)
            vectors = sorted(members)
        else:
            atoms, target, residues = FactorEngine._search_problem(monoid, x)
            outcome = LatticeSearch.run(atoms, target, budget, residues)
            vectors, complete = list(outcome.solutions), outcome.complete

        if complete and not vectors:
            raise NotInMonoid(f"{x!r} has no factorization in {monoid.label()}")
        if not complete:
            logger.warning(
                f"Factorizations of {x!r} truncated at {len(vectors)} after {budget} nodes"
            )
        return FactorizationSet(
            element=x,
            factorizations=tuple(Factorization(exponents=v) for v in vectors),
            complete=complete,
        )

    @staticmethod
    def _search_problem(monoid, x):
        """Atoms, target and residue constraints of the lattice search for x"""
        if isinstance(monoid, NumericalSemigroup):
            if x < 0:
                raise NotInMonoid(f"{x} is negative")
            return [(g,) for g in monoid.generators], (x,), None
        if isinstance(monoid, AffineSemigroup):
            if any(c < 0 for c in x):
                raise NotInMonoid(f"{x} has a negative coordinate")
            return list(monoid.generators), x, None
        if isinstance(monoid, BlockMonoid):
            if not MonoidBuilder.contains(monoid, x):
                raise NotInMonoid(f"{x} is not a zero-sum sequence over the support")
            return list(monoid.atoms), x, None
        if isinstance(monoid, PuiseuxTruncation):
            common, scaled = NumberTheoryUtils.clear_denominators(monoid.atoms)
            if x < 0 or (x * common).denominator != 1:
                raise NotInMonoid(f"{x} is not a combination of {monoid.label()}")
            target = int(x * common)
            residues = NumberTheoryUtils.exponent_residues(
                scaled, NumberTheoryUtils.atom_moduli(monoid.atoms), target
            )
            return [(a,) for a in scaled], (target,), residues
        raise TagMismatch(f"Unknown monoid type {type(monoid).__name__}")

    @staticmethod
    def length_mask(monoid, x, budget: Optional[int] = None) -> int:
        """Bitmask of L(x); 0 when x is not in the monoid"""
        budget = budget or DEFAULT_BUDGET
        x = MonoidBuilder.coerce_element(monoid, x)
        if isinstance(monoid, NumericalSemigroup):
            return LengthOracle.numerical(monoid.generators, x)
        if isinstance(monoid, AffineSemigroup):
            if any(c < 0 for c in x):
                return 0
            return LengthOracle.vector(monoid.generators, x)
        if isinstance(monoid, BlockMonoid):
            if not MonoidBuilder.contains(monoid, x):
                return 0
            return LengthOracle.vector(monoid.atoms, x)
        if isinstance(monoid, PuiseuxTruncation):
            return LengthOracle.puiseux(monoid.atoms, x, budget)
        if isinstance(monoid, FinitePresentation):
            if any(e < 0 for e in x):
                return 0
            members, complete = RewritingUtils.closure(monoid.relations, x, budget)
            if not complete:
                raise BudgetExceeded(
                    f"Rewriting class of {x} not exhausted within {budget} words"
                )
            mask = 0
            for word in members:
                mask |= 1 << sum(word)
            return mask
        if isinstance(monoid, DirectSum):
            mask = 1
            for c, part in zip(monoid.components, x):
                mask = NumberTheoryUtils.mask_sumset(
                    mask, FactorEngine.length_mask(c, part, budget)
                )
            return mask
        raise TagMismatch(f"Unknown monoid type {type(monoid).__name__}")

    @staticmethod
    def length_set(monoid, x, budget: Optional[int] = None) -> LengthSet:
        mask = FactorEngine.length_mask(monoid, x, budget)
        if mask == 0:
            raise NotInMonoid(f"{x!r} is not an element of {monoid.label()}")
        return LengthSet.from_mask(mask)

    @staticmethod
    def _exponents(z: FactorizationLike):
        return z.exponents if isinstance(z, Factorization) else tuple(z)

    @staticmethod
    def factorization_gcd(z: FactorizationLike, y: FactorizationLike) -> Factorization:
        a, b = FactorEngine._exponents(z), FactorEngine._exponents(y)
        if len(a) != len(b):
            raise IndexSpaceMismatch(f"Factorizations over {len(a)} and {len(b)} atoms")
        return Factorization(exponents=tuple(min(p, q) for p, q in zip(a, b)))

    @staticmethod
    def distance(z: FactorizationLike, y: FactorizationLike) -> int:
        """max(|z - gcd|, |y - gcd|)"""
        a, b = FactorEngine._exponents(z), FactorEngine._exponents(y)
        common = FactorEngine.factorization_gcd(a, b).exponents
        return max(sum(a) - sum(common), sum(b) - sum(common))

    @staticmethod
    def graph_components(fs: FactorizationSet) -> GraphPartition:
        """Components of the graph joining factorizations that share an atom"""
        fs.require_complete()
        components = DisjointSet(len(fs))
        first_with_atom = {}
        for index, z in enumerate(fs.factorizations):
            for atom in z.support:
                if atom in first_with_atom:
                    components.union(first_with_atom[atom], index)
                else:
                    first_with_atom[atom] = index
        return GraphPartition(blocks=components.blocks())

    @staticmethod
    def canonical_word(monoid: FinitePresentation, x, budget: Optional[int] = None):
        """Least word in the rewriting class of x"""
        if not isinstance(monoid, FinitePresentation):
            raise TagMismatch("Canonical words exist only for finite presentations")
        x = MonoidBuilder.coerce_element(monoid, x)
        return RewritingUtils.canonical(monoid.relations, x, budget or DEFAULT_BUDGET)

    @staticmethod
    def cancellative_on_scan(monoid: FinitePresentation, bound: int) -> bool:
        """True when x*u = y*u forces x = y for every scanned class pair and atom u"""
        if not isinstance(monoid, FinitePresentation):
            raise TagMismatch("Cancellativity is checked for finite presentations")
        classes = list(MonoidBuilder.scan_elements(monoid, bound))
        for u in range(monoid.atom_count):
            seen = {}
            for x in classes:
                shifted = tuple(e + (i == u) for i, e in enumerate(x))
                product_class = FactorEngine.canonical_word(monoid, shifted)
                other = seen.setdefault(product_class, x)
                if other != x:
                    logger.warning(
                        f"Cancellation fails: {other} and {x} agree after multiplying by atom {u}"
                    )
                    return False
        return True
