"""
Builders for the bespoke monoid families and their checkpoint computations
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from models.constructions import MabcSpec, NoasymSpec
from models.errors import InvalidIndex, InvalidLevel, InvalidSpec
from models.factorization import LengthSet
from models.invariants import SeriesPoint
from models.monoid import FinitePresentation, NumericalSemigroup, PuiseuxTruncation
from engines.factor_engine import FactorEngine
from engines.invariants import InvariantCalculator
from engines.monoid_core import MonoidBuilder
from utils.number_theory import NumberTheoryUtils

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# Base element whose multiples the Puiseux series follows
NOASYM_BASE = Fraction(8)


class ConstructionFactory:
    """Utility class for the M(a,b,c), chain, infinite-delta and Puiseux families"""

    _presentation_cache: Dict[MabcSpec, FinitePresentation] = {}
    _lock = threading.Lock()

    # --- M(a,b,c) ---------------------------------------------------------

    @staticmethod
    def validate_mabc(spec: MabcSpec) -> MabcSpec:
        if spec.a < 1:
            raise InvalidSpec(f"a must be positive, got {spec.a}")
        if spec.b <= spec.a:
            raise InvalidSpec(f"b must exceed a, got a={spec.a}, b={spec.b}")
        if not 0 <= spec.c <= 1:
            raise InvalidSpec(f"c must lie in [0, 1], got {spec.c}")
        if spec.truncation < 1:
            raise InvalidSpec(f"Truncation must be positive, got {spec.truncation}")
        return spec

    @staticmethod
    def mabc_atoms(spec: MabcSpec) -> List[Tuple[int, int]]:
        """(i, j) for every atom q_{i,j} of the truncation, chain by chain"""
        return [
            (i, j)
            for i in range(1, spec.truncation + 1)
            for j in spec.chain_exponents(i)
        ]

    @staticmethod
    def mabc_presentation(spec: MabcSpec) -> FinitePresentation:
        ConstructionFactory.validate_mabc(spec)
        with ConstructionFactory._lock:
            cached = ConstructionFactory._presentation_cache.get(spec)
        if cached is not None:
            return cached

        atoms = ConstructionFactory.mabc_atoms(spec)
        index = {atom: n for n, atom in enumerate(atoms)}
        size = len(atoms)

        def power(i: int, j: int) -> Vector:
            word = [0] * size
            word[index[(i, j)]] = j
            return tuple(word)

        relations = []
        for i in range(1, spec.truncation + 1):
            js = spec.chain_exponents(i)
            relations.extend((power(i, j), power(i, nxt)) for j, nxt in zip(js, js[1:]))

        monoid = MonoidBuilder.make_presentation(
            size, relations, atom_names=[f"q_{{{i},{j}}}" for i, j in atoms]
        )
        with ConstructionFactory._lock:
            ConstructionFactory._presentation_cache[spec] = monoid
        logger.info(
            f"Built M({spec.a},{spec.b},{spec.c}) truncated at i={spec.truncation}: {size} atoms"
        )
        return monoid

    @staticmethod
    def _check_index(spec: MabcSpec, i: int, t: int):
        if not 1 <= i <= spec.truncation:
            raise InvalidIndex(f"Chain index {i} outside 1..{spec.truncation}")
        if t < 1:
            raise InvalidIndex(f"Power must be positive, got {t}")

    @staticmethod
    def mabc_power_element(spec: MabcSpec, i: int, t: int = 1) -> Vector:
        """The word q_{i,ia}^{t*i*a}"""
        ConstructionFactory._check_index(spec, i, t)
        atoms = ConstructionFactory.mabc_atoms(spec)
        word = [0] * len(atoms)
        word[atoms.index((i, i * spec.a))] = t * i * spec.a
        return tuple(word)

    @staticmethod
    def mabc_power_lengthset(
        spec: MabcSpec, i: int, t: int = 1, budget: Optional[int] = None
    ) -> LengthSet:
        monoid = ConstructionFactory.mabc_presentation(spec)
        element = ConstructionFactory.mabc_power_element(spec, i, t)
        return FactorEngine.length_set(monoid, element, budget)

    @staticmethod
    def mabc_closed_form(spec: MabcSpec, i: int, t: int = 1) -> LengthSet:
        """t-fold sumset of {ia, ..., ia + k(i)} u {ib}"""
        ConstructionFactory.validate_mabc(spec)
        ConstructionFactory._check_index(spec, i, t)
        base = 0
        for j in spec.chain_exponents(i):
            base |= 1 << j
        mask = 1
        for _ in range(t):
            mask = NumberTheoryUtils.mask_sumset(mask, base)
        return LengthSet.from_mask(mask)

    # --- chain monoids ----------------------------------------------------

    @staticmethod
    def chain_exponents(i: int) -> Tuple[int, ...]:
        """(3, 4, 6, 8, ..., 2i)"""
        if i < 3:
            raise InvalidIndex(f"Chain monoids need i >= 3, got {i}")
        return (3,) + tuple(range(4, 2 * i + 1, 2))

    @staticmethod
    def chain_monoid(i: int) -> FinitePresentation:
        """a_1^3 = a_2^4 = a_3^6 = ... = a_i^(2i)"""
        exponents = ConstructionFactory.chain_exponents(i)

        def power(n: int) -> Vector:
            return tuple(exponents[n] if m == n else 0 for m in range(i))

        relations = [(power(n), power(n + 1)) for n in range(i - 1)]
        return MonoidBuilder.make_presentation(
            i, relations, atom_names=[f"a_{n + 1}" for n in range(i)]
        )

    # --- infinite delta family -------------------------------------------

    @staticmethod
    def infinite_delta_member(i: int) -> NumericalSemigroup:
        """<2i, 3i, 6i+1>"""
        if i < 2:
            raise InvalidIndex(f"Infinite-delta members need i >= 2, got {i}")
        return MonoidBuilder.make_numerical([2 * i, 3 * i, 6 * i + 1])

    @staticmethod
    def infinite_delta_witness(i: int) -> int:
        """i(6i+1), where the length density 1/2 is reached"""
        if i < 2:
            raise InvalidIndex(f"Infinite-delta members need i >= 2, got {i}")
        return i * (6 * i + 1)

    # --- Puiseux monoid without asymptotic length density ----------------

    @staticmethod
    def noasym_monoid(spec: NoasymSpec) -> PuiseuxTruncation:
        if spec.level not in (0, 1):
            raise InvalidLevel(f"Only levels 0 and 1 are defined, got {spec.level}")
        return MonoidBuilder.make_puiseux(list(spec.atoms))

    @staticmethod
    def noasym_series(
        spec: NoasymSpec,
        n_list: Sequence[int],
        budget: Optional[int] = None,
        workers: int = 1,
        base: Fraction = NOASYM_BASE,
    ) -> List[SeriesPoint]:
        """ld(n * base) at each checkpoint n, ascending by n"""
        monoid = ConstructionFactory.noasym_monoid(spec)
        return ConstructionFactory.multiple_series(monoid, base, n_list, budget, workers)

    @staticmethod
    def multiple_series(
        monoid: PuiseuxTruncation,
        base: Fraction,
        n_list: Sequence[int],
        budget: Optional[int] = None,
        workers: int = 1,
    ) -> List[SeriesPoint]:
        checkpoints = sorted(set(n_list))
        for n in checkpoints:
            if n < 1:
                raise InvalidIndex(f"Series checkpoints must be positive, got {n}")

        def point(n: int) -> SeriesPoint:
            stats = InvariantCalculator.element_stats(monoid, base * n, budget)
            logger.info(f"Series point n={n}: |L| = {stats.size}, ld = {stats.ld}")
            return SeriesPoint(
                n=n, ld=stats.ld, min_len=stats.min_len, max_len=stats.max_len, size=stats.size
            )

        return list(InvariantCalculator._ordered_map(point, checkpoints, workers))
