"""
Constructors, element arithmetic, membership and element scans for every
monoid presentation kind
"""

import logging
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, product
from math import gcd
from numbers import Integral
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix, ilcm

from models.errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyGenerators,
    InvalidGenerator,
    MalformedRelation,
    NoPositiveGrading,
    NonAtomicGenerator,
    NonCoprime,
    TagMismatch,
    ZeroVector,
)
from models.monoid import (
    AffineSemigroup,
    BlockMonoid,
    DirectSum,
    FinitePresentation,
    NumericalSemigroup,
    PuiseuxTruncation,
)
from engines.length_oracle import LengthOracle
from engines.lattice_search import LatticeSearch
from utils.graph_utils import DisjointSet
from utils.number_theory import NumberTheoryUtils
from utils.rewriting_utils import RewritingUtils

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# Node budget for membership tests and scan grouping
MEMBERSHIP_BUDGET = 5_000_000


class MonoidBuilder:
    """Utility class building presentations and operating on their elements"""

    # --- constructors -----------------------------------------------------

    @staticmethod
    def make_numerical(gens: Sequence[int]) -> NumericalSemigroup:
        if not gens:
            raise EmptyGenerators("A numerical semigroup needs at least one generator")
        for g in gens:
            if not isinstance(g, Integral) or g < 1:
                raise InvalidGenerator(f"Generators must be positive integers, got {g!r}")
        if reduce(gcd, gens) != 1:
            raise NonCoprime(
                f"gcd of {list(gens)} is {reduce(gcd, gens)}; rescale by it first"
            )

        minimal: List[int] = []
        for g in sorted(set(int(g) for g in gens)):
            if NumberTheoryUtils.is_representable(g, minimal):
                logger.debug(f"Dropping redundant generator {g}")
                continue
            minimal.append(g)

        monoid = NumericalSemigroup(generators=tuple(minimal))
        logger.info(f"Built numerical semigroup {monoid.label()}")
        return monoid

    @staticmethod
    def make_affine(vectors: Sequence[Sequence[int]]) -> AffineSemigroup:
        if not vectors:
            raise EmptyGenerators("An affine semigroup needs at least one generator")
        dimension = len(vectors[0])
        if dimension == 0:
            raise DimensionMismatch("Generator vectors must have positive length")

        generators: List[Vector] = []
        for v in vectors:
            if len(v) != dimension:
                raise DimensionMismatch(
                    f"Generator {tuple(v)} has length {len(v)}, expected {dimension}"
                )
            if any(not isinstance(c, Integral) or c < 0 for c in v):
                raise InvalidGenerator(f"Generator {tuple(v)} has a negative entry")
            if not any(v):
                raise ZeroVector("Generators must be nonzero")
            vec = tuple(int(c) for c in v)
            if vec not in generators:
                generators.append(vec)

        monoid = AffineSemigroup(dimension=dimension, generators=tuple(generators))
        logger.info(f"Built affine semigroup with {len(generators)} generators in N^{dimension}")
        return monoid

    @staticmethod
    def make_presentation(
        atom_count: int,
        relations: Sequence[Tuple[Sequence[int], Sequence[int]]],
        atom_names: Optional[Sequence[str]] = None,
    ) -> FinitePresentation:
        if atom_count < 1:
            raise EmptyGenerators("A presentation needs at least one atom")
        if atom_names is not None and len(atom_names) != atom_count:
            raise MalformedRelation(
                f"{len(atom_names)} atom names given for {atom_count} atoms"
            )

        cleaned: List[Tuple[Vector, Vector]] = []
        for left, right in relations:
            if len(left) != atom_count or len(right) != atom_count:
                raise MalformedRelation(
                    f"Relation sides must have length {atom_count}: {left} = {right}"
                )
            if any(e < 0 for e in left) or any(e < 0 for e in right):
                raise MalformedRelation(f"Negative exponent in {left} = {right}")
            if not any(left) or not any(right):
                raise MalformedRelation(f"Relation side is the empty word: {left} = {right}")
            if tuple(left) == tuple(right):
                raise MalformedRelation(f"Relation sides are equal: {left}")
            cleaned.append((tuple(int(e) for e in left), tuple(int(e) for e in right)))

        weights = MonoidBuilder.positive_grading(atom_count, cleaned)
        monoid = FinitePresentation(
            atom_count=atom_count,
            relations=tuple(cleaned),
            weights=weights,
            atom_names=tuple(atom_names) if atom_names else None,
        )
        logger.info(
            f"Built presentation with {atom_count} atoms, {len(cleaned)} relations, "
            f"weights {weights}"
        )
        return monoid

    @staticmethod
    def positive_grading(
        atom_count: int, relations: Sequence[Tuple[Vector, Vector]]
    ) -> Vector:
        """Integer weights w > 0 with w.(left - right) = 0 for every relation.

        Atoms are split into the connected pieces the relations link; each
        piece takes the sum of a rational null-space basis of its balance
        system, which must come out strictly positive.
        """
        linked = DisjointSet(atom_count)
        for left, right in relations:
            support = [i for i in range(atom_count) if left[i] or right[i]]
            for i in support[1:]:
                linked.union(support[0], i)

        weights = [1] * atom_count
        for block in linked.blocks():
            rows = [
                [left[i] - right[i] for i in block]
                for left, right in relations
                if any(left[i] or right[i] for i in block)
            ]
            if not rows:
                continue
            basis = Matrix(rows).nullspace()
            if not basis:
                raise NoPositiveGrading(
                    f"Relations force a zero weight on atoms {list(block)}"
                )
            combined = reduce(lambda x, y: x + y, basis)
            if any(entry <= 0 for entry in combined):
                raise NoPositiveGrading(
                    f"No positive grading found for atoms {list(block)}"
                )
            scale = reduce(ilcm, [entry.q for entry in combined], 1)
            scaled = [int(entry * scale) for entry in combined]
            common = reduce(gcd, scaled)
            for i, w in zip(block, scaled):
                weights[i] = w // common
        return tuple(weights)

    @staticmethod
    def make_puiseux(atoms: Sequence[Any]) -> PuiseuxTruncation:
        if not atoms:
            raise EmptyGenerators("A Puiseux truncation needs at least one atom")
        values = []
        for a in atoms:
            value = Fraction(a)
            if value <= 0:
                raise InvalidGenerator(f"Atoms must be positive rationals, got {a!r}")
            values.append(value)
        ordered = sorted(set(values))

        for i, a in enumerate(ordered):
            if NumberTheoryUtils.is_rational_combination(a, ordered[:i]):
                raise NonAtomicGenerator(f"{a} is a sum of smaller listed atoms")

        monoid = PuiseuxTruncation(atoms=tuple(ordered))
        logger.info(f"Built Puiseux truncation {monoid.label()}")
        return monoid

    @staticmethod
    def direct_sum(presentations: Sequence[Any]):
        if not presentations:
            raise EmptyGenerators("A direct sum needs at least one summand")
        flat = []
        for p in presentations:
            if isinstance(p, DirectSum):
                flat.extend(p.components)
            else:
                flat.append(p)
        if len(flat) == 1:
            return flat[0]
        monoid = DirectSum(components=tuple(flat))
        logger.info(f"Built direct sum of {len(flat)} summands")
        return monoid

    # --- elements ---------------------------------------------------------

    @staticmethod
    def coerce_element(monoid, x):
        """Normalise x to the element type of the monoid kind"""
        if isinstance(monoid, NumericalSemigroup):
            if isinstance(x, bool) or not isinstance(x, Integral):
                raise TagMismatch(f"Numerical semigroup elements are integers, got {x!r}")
            return int(x)
        if isinstance(monoid, PuiseuxTruncation):
            if isinstance(x, bool) or not isinstance(x, (Integral, Fraction)):
                raise TagMismatch(f"Puiseux elements are rationals, got {x!r}")
            return Fraction(x)
        if isinstance(monoid, DirectSum):
            if not isinstance(x, (tuple, list)) or len(x) != len(monoid.components):
                raise TagMismatch(
                    f"Direct sum elements are {len(monoid.components)}-tuples, got {x!r}"
                )
            return tuple(
                MonoidBuilder.coerce_element(c, part)
                for c, part in zip(monoid.components, x)
            )

        size = MonoidBuilder.ambient_size(monoid)
        if not isinstance(x, (tuple, list)) or len(x) != size:
            raise TagMismatch(f"{monoid.kind} elements are vectors of length {size}, got {x!r}")
        if any(isinstance(c, bool) or not isinstance(c, Integral) for c in x):
            raise TagMismatch(f"Vector entries must be integers, got {x!r}")
        return tuple(int(c) for c in x)

    @staticmethod
    def ambient_size(monoid) -> int:
        if isinstance(monoid, AffineSemigroup):
            return monoid.dimension
        if isinstance(monoid, FinitePresentation):
            return monoid.atom_count
        if isinstance(monoid, BlockMonoid):
            return len(monoid.support)
        raise TagMismatch(f"{type(monoid).__name__} has no vector elements")

    @staticmethod
    def identity(monoid):
        if isinstance(monoid, NumericalSemigroup):
            return 0
        if isinstance(monoid, PuiseuxTruncation):
            return Fraction(0)
        if isinstance(monoid, DirectSum):
            return tuple(MonoidBuilder.identity(c) for c in monoid.components)
        return tuple(0 for _ in range(MonoidBuilder.ambient_size(monoid)))

    @staticmethod
    def add_elements(monoid, x, y):
        x = MonoidBuilder.coerce_element(monoid, x)
        y = MonoidBuilder.coerce_element(monoid, y)
        if isinstance(monoid, (NumericalSemigroup, PuiseuxTruncation)):
            return x + y
        if isinstance(monoid, DirectSum):
            return tuple(
                MonoidBuilder.add_elements(c, a, b)
                for c, a, b in zip(monoid.components, x, y)
            )
        return tuple(a + b for a, b in zip(x, y))

    @staticmethod
    def scale_element(monoid, x, n: int):
        """x^n in multiplicative notation"""
        x = MonoidBuilder.coerce_element(monoid, x)
        if isinstance(monoid, (NumericalSemigroup, PuiseuxTruncation)):
            return x * n
        if isinstance(monoid, DirectSum):
            return tuple(
                MonoidBuilder.scale_element(c, a, n) for c, a in zip(monoid.components, x)
            )
        return tuple(a * n for a in x)

    @staticmethod
    def element_atom(monoid, index: int):
        """The element given by the index-th atom"""
        if isinstance(monoid, NumericalSemigroup):
            return monoid.generators[index]
        if isinstance(monoid, PuiseuxTruncation):
            return monoid.atoms[index]
        if isinstance(monoid, AffineSemigroup):
            return monoid.generators[index]
        if isinstance(monoid, BlockMonoid):
            return monoid.atoms[index]
        if isinstance(monoid, FinitePresentation):
            return tuple(int(i == index) for i in range(monoid.atom_count))
        raise TagMismatch("Direct sums address atoms through their components")

    # --- membership -------------------------------------------------------

    @staticmethod
    def contains(monoid, x) -> bool:
        x = MonoidBuilder.coerce_element(monoid, x)
        if isinstance(monoid, NumericalSemigroup):
            if x < 0:
                return False
            apery = NumberTheoryUtils.apery_set(monoid.generators)
            return x >= apery[x % monoid.generators[0]]
        if isinstance(monoid, AffineSemigroup):
            if any(c < 0 for c in x):
                return False
            return LengthOracle.vector(monoid.generators, x) != 0
        if isinstance(monoid, FinitePresentation):
            return all(e >= 0 for e in x)
        if isinstance(monoid, BlockMonoid):
            if any(c < 0 for c in x):
                return False
            total = monoid.group.zero()
            for g, k in zip(monoid.support, x):
                total = monoid.group.add(total, monoid.group.scale(g, k))
            return total == monoid.group.zero()
        if isinstance(monoid, PuiseuxTruncation):
            if x < 0:
                return False
            common, scaled = NumberTheoryUtils.clear_denominators(monoid.atoms)
            if (x * common).denominator != 1:
                return False
            target = int(x * common)
            residues = NumberTheoryUtils.exponent_residues(
                scaled, NumberTheoryUtils.atom_moduli(monoid.atoms), target
            )
            outcome = LatticeSearch.run(
                [(a,) for a in scaled], (target,), MEMBERSHIP_BUDGET, residues,
                lengths_only=True, stop_after_first=True,
            )
            if outcome.lengths:
                return True
            if not outcome.complete:
                raise BudgetExceeded(
                    f"Membership of {x} undecided after {outcome.nodes} search nodes"
                )
            return False
        if isinstance(monoid, DirectSum):
            return all(MonoidBuilder.contains(c, part) for c, part in zip(monoid.components, x))
        raise TagMismatch(f"Unknown monoid type {type(monoid).__name__}")

    @staticmethod
    def frobenius_number(monoid: NumericalSemigroup) -> int:
        if not isinstance(monoid, NumericalSemigroup):
            raise TagMismatch("The Frobenius number is defined for numerical semigroups")
        return NumberTheoryUtils.frobenius_number(monoid.generators)

    # --- scans ------------------------------------------------------------

    @staticmethod
    def scan_elements(monoid, bound: int) -> Iterator[Any]:
        """Nonidentity elements up to `bound`, in the fixed scan order of the kind"""
        if isinstance(monoid, NumericalSemigroup):
            apery = NumberTheoryUtils.apery_set(monoid.generators)
            m = monoid.generators[0]
            return (x for x in range(1, bound + 1) if x >= apery[x % m])
        if isinstance(monoid, AffineSemigroup):
            return MonoidBuilder._scan_affine(monoid, bound)
        if isinstance(monoid, PuiseuxTruncation):
            return MonoidBuilder._scan_puiseux(monoid, bound)
        if isinstance(monoid, FinitePresentation):
            return MonoidBuilder._scan_presentation(monoid, bound)
        if isinstance(monoid, BlockMonoid):
            return MonoidBuilder._scan_block(monoid, bound)
        if isinstance(monoid, DirectSum):
            return MonoidBuilder._scan_direct_sum(monoid, bound)
        raise TagMismatch(f"Unknown monoid type {type(monoid).__name__}")

    @staticmethod
    def _compositions(total: int, parts: int) -> Iterator[Vector]:
        """Vectors of `parts` naturals summing to `total`, lexicographically descending"""
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in MonoidBuilder._compositions(total - first, parts - 1):
                yield (first,) + rest

    @staticmethod
    def _scan_affine(monoid: AffineSemigroup, bound: int) -> Iterator[Vector]:
        for total in range(1, bound + 1):
            for v in MonoidBuilder._compositions(total, monoid.dimension):
                if LengthOracle.vector(monoid.generators, v):
                    yield v

    @staticmethod
    def _scan_puiseux(monoid: PuiseuxTruncation, bound: int) -> Iterator[Fraction]:
        values = set()
        for count in range(1, bound + 1):
            for combo in combinations_with_replacement(monoid.atoms, count):
                values.add(sum(combo, Fraction(0)))
        return iter(sorted(values))

    @staticmethod
    def _words_up_to(weights: Vector, bound: int) -> Iterator[Vector]:
        def extend(pos: int, remaining: int, prefix: Tuple[int, ...]):
            if pos == len(weights):
                yield prefix
                return
            for e in range(remaining // weights[pos] + 1):
                yield from extend(pos + 1, remaining - e * weights[pos], prefix + (e,))

        return extend(0, bound, ())

    @staticmethod
    def _scan_presentation(monoid: FinitePresentation, bound: int) -> Iterator[Vector]:
        classes = {}
        for word in MonoidBuilder._words_up_to(monoid.weights, bound):
            if not any(word):
                continue
            canonical = RewritingUtils.canonical(monoid.relations, word, MEMBERSHIP_BUDGET)
            classes.setdefault(canonical, monoid.degree(canonical))
        ordered = sorted(classes, key=lambda w: (classes[w], w))
        logger.debug(f"Presentation scan to degree {bound}: {len(ordered)} classes")
        return iter(ordered)

    @staticmethod
    def block_scan_atoms(monoid: BlockMonoid) -> List[Vector]:
        """Non-prime atoms by descending length, then descending multiplicities"""
        zero = monoid.group.zero()
        prime = tuple(int(g == zero) for g in monoid.support)
        atoms = [a for a in monoid.atoms if a != prime]
        return sorted(atoms, key=lambda a: (-sum(a), tuple(-c for c in a)))

    @staticmethod
    def _scan_block(monoid: BlockMonoid, bound: int) -> Iterator[Vector]:
        atoms = MonoidBuilder.block_scan_atoms(monoid)
        if not atoms:
            return
        sizes = [sum(a) for a in atoms]
        shortest = min(sizes)

        def multisets(start: int, left: int, room: int, prefix: Tuple[int, ...]):
            # Same order as combinations_with_replacement, skipping oversize products
            if left == 0:
                yield prefix
                return
            for i in range(start, len(atoms)):
                if sizes[i] + (left - 1) * shortest <= room:
                    yield from multisets(i, left - 1, room - sizes[i], prefix + (i,))

        seen = set()
        count = 1
        while count * shortest <= bound:
            for combo in multisets(0, count, bound, ()):
                element = tuple(map(sum, zip(*(atoms[i] for i in combo))))
                if element not in seen:
                    seen.add(element)
                    yield element
            count += 1

    @staticmethod
    def _scan_direct_sum(monoid: DirectSum, bound: int) -> Iterator[Tuple]:
        pools = [
            [MonoidBuilder.identity(c)] + list(MonoidBuilder.scan_elements(c, bound))
            for c in monoid.components
        ]
        iterator = product(*pools)
        next(iterator)  # all identities
        return iterator
