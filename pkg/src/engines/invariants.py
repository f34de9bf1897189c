"""
Invariant computations: length statistics, bounded scans, Betti elements,
catenary and tame degrees, and power series of length densities
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import islice
from math import ceil
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from models.errors import NoLdElements, TagMismatch
from models.factorization import Factorization, FactorizationSet, LengthSet
from models.invariants import (
    AsymptoticReport,
    AsymptoticTerm,
    BettiLdResult,
    DeltaScan,
    ElasticityScan,
    LdSearchReport,
    LengthStats,
    TameDegree,
)
from models.monoid import BlockMonoid, NumericalSemigroup
from engines.factor_engine import FactorEngine
from engines.monoid_core import MonoidBuilder
from utils.graph_utils import DisjointSet
from utils.number_theory import NumberTheoryUtils

logger = logging.getLogger(__name__)

# Elements handed to the thread pool per round
CHUNK_PER_WORKER = 16


class InvariantCalculator:
    """Utility class computing factorization invariants"""

    # --- single length sets ----------------------------------------------

    @staticmethod
    def length_stats(ls: LengthSet) -> LengthStats:
        lengths = tuple(ls.lengths)
        low, high = lengths[0], lengths[-1]
        # Only the identity has min length 0; its elasticity is taken as 1
        elasticity = Fraction(high, low) if low else Fraction(1)
        ld = Fraction(len(lengths) - 1, high - low) if high > low else None
        return LengthStats(
            lengths=lengths,
            max_len=high,
            min_len=low,
            elasticity=elasticity,
            delta=tuple(NumberTheoryUtils.gaps(lengths)),
            ld=ld,
            size=len(lengths),
        )

    @staticmethod
    def element_stats(monoid, x, budget: Optional[int] = None) -> LengthStats:
        return InvariantCalculator.length_stats(FactorEngine.length_set(monoid, x, budget))

    # --- scans ------------------------------------------------------------

    @staticmethod
    def _scan_stats(
        monoid, bound: int, budget: Optional[int], workers: int
    ) -> Iterator[Tuple[Any, LengthStats]]:
        """(element, stats) pairs in scan order; workers only change throughput"""
        elements = MonoidBuilder.scan_elements(monoid, bound)

        def compute(x):
            return x, InvariantCalculator.element_stats(monoid, x, budget)

        yield from InvariantCalculator._ordered_map(compute, elements, workers)

    @staticmethod
    def _ordered_map(func: Callable, items: Iterable, workers: int) -> Iterator:
        if workers <= 1:
            for item in items:
                yield func(item)
            return
        iterator = iter(items)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            while True:
                chunk = list(islice(iterator, workers * CHUNK_PER_WORKER))
                if not chunk:
                    return
                yield from pool.map(func, chunk)

    @staticmethod
    def delta_scan(
        monoid, bound: int, budget: Optional[int] = None, workers: int = 1
    ) -> DeltaScan:
        """Union of delta sets over the scan; an under-approximation of the monoid's"""
        union = set()
        scanned = 0
        for _, stats in InvariantCalculator._scan_stats(monoid, bound, budget, workers):
            union.update(stats.delta)
            scanned += 1
        logger.info(f"Delta scan of {monoid.label()} to {bound}: {sorted(union)} over {scanned} elements")
        return DeltaScan(bound=bound, delta=tuple(sorted(union)), scanned=scanned)

    @staticmethod
    def block_ld_floor(monoid) -> Optional[Fraction]:
        """1/(D(G)-2) when |G| >= 3, the least length density a block monoid allows"""
        if isinstance(monoid, BlockMonoid) and monoid.group.order >= 3 and monoid.davenport > 2:
            return Fraction(1, monoid.davenport - 2)
        return None

    @staticmethod
    def ld_search(
        monoid, bound: int, budget: Optional[int] = None, workers: int = 1
    ) -> LdSearchReport:
        floor = InvariantCalculator.block_ld_floor(monoid)
        minimum: Optional[Fraction] = None
        witness = None
        witness_lengths: Tuple[int, ...] = ()
        max_delta = 0
        scanned = 0
        stopped_early = False

        for x, stats in InvariantCalculator._scan_stats(monoid, bound, budget, workers):
            scanned += 1
            if stats.ld is None:
                continue
            max_delta = max(max_delta, max(stats.delta))
            if minimum is None or stats.ld < minimum:
                minimum, witness, witness_lengths = stats.ld, x, stats.lengths
                logger.debug(f"New minimum length density {minimum} at {x!r}")
            if floor is not None and minimum == floor:
                stopped_early = True
                break

        if minimum is None:
            raise NoLdElements(
                f"No element of {monoid.label()} up to {bound} has two distinct lengths"
            )

        certificate = Fraction(1, max_delta)
        accepted = minimum == certificate or (floor is not None and minimum == floor)
        logger.info(
            f"Length density search of {monoid.label()} to {bound}: minimum {minimum} "
            f"at {witness!r} after {scanned} elements"
        )
        return LdSearchReport(
            bound=bound,
            minimum_ld=minimum,
            witness=witness,
            witness_lengths=witness_lengths,
            max_delta_seen=max_delta,
            lower_bound_certificate=certificate,
            accepted_within_scan=accepted,
            scanned=scanned,
            stopped_early=stopped_early,
        )

    @staticmethod
    def elasticity_scan(
        monoid, bound: int, budget: Optional[int] = None, workers: int = 1
    ) -> ElasticityScan:
        best: Optional[Fraction] = None
        witness = None
        scanned = 0
        for x, stats in InvariantCalculator._scan_stats(monoid, bound, budget, workers):
            scanned += 1
            if best is None or stats.elasticity > best:
                best, witness = stats.elasticity, x
        if best is None:
            raise NoLdElements(f"Scan of {monoid.label()} up to {bound} is empty")
        return ElasticityScan(bound=bound, maximum=best, witness=witness, scanned=scanned)

    # --- Betti elements ---------------------------------------------------

    @staticmethod
    def is_betti(monoid, x, budget: Optional[int] = None) -> bool:
        """x has two distinct lengths and a disconnected factorization graph"""
        mask = FactorEngine.length_mask(monoid, x, budget)
        if mask & (mask - 1) == 0:
            return False
        fs = FactorEngine.factorizations(monoid, x, budget)
        return FactorEngine.graph_components(fs).is_disconnected

    @staticmethod
    def betti_scan(
        monoid, bound: int, budget: Optional[int] = None, workers: int = 1
    ) -> List[Any]:
        elements = list(MonoidBuilder.scan_elements(monoid, bound))
        flags = InvariantCalculator._ordered_map(
            lambda x: InvariantCalculator.is_betti(monoid, x, budget), elements, workers
        )
        found = [x for x, flag in zip(elements, flags) if flag]
        logger.info(f"Betti scan of {monoid.label()} to {bound}: {found}")
        return found

    @staticmethod
    def betti_ld_test(
        monoid, bound: int, budget: Optional[int] = None, workers: int = 1
    ) -> BettiLdResult:
        """Is the minimum scanned ld equal to 1/max delta, and is it reached at a Betti element?"""
        report = InvariantCalculator.ld_search(monoid, bound, budget, workers)
        betti = InvariantCalculator.betti_scan(monoid, bound, budget, workers)
        lds = [InvariantCalculator.element_stats(monoid, b, budget).ld for b in betti]

        betti_witness = next(
            (b for b, ld in zip(betti, lds) if ld == report.minimum_ld), None
        )
        return BettiLdResult(
            minimum_ld=report.minimum_ld,
            certificate=report.lower_bound_certificate,
            minimum_is_certificate=report.minimum_ld == report.lower_bound_certificate,
            betti_elements=tuple(betti),
            betti_lds=tuple(lds),
            attained_at_betti=betti_witness is not None,
            betti_witness=betti_witness,
        )

    # --- distances --------------------------------------------------------

    @staticmethod
    def distance_matrix(first: Sequence[Sequence[int]], second: Sequence[Sequence[int]]) -> np.ndarray:
        """Pairwise factorization distances between two lists of exponent vectors"""
        a = np.asarray(first, dtype=np.int64)
        b = np.asarray(second, dtype=np.int64)
        common = np.minimum(a[:, None, :], b[None, :, :]).sum(axis=2)
        left = a.sum(axis=1)[:, None] - common
        right = b.sum(axis=1)[None, :] - common
        return np.maximum(left, right)

    @staticmethod
    def catenary_degree(monoid, x, budget: Optional[int] = None) -> int:
        fs = FactorEngine.factorizations(monoid, x, budget).require_complete()
        return InvariantCalculator.catenary_of_set(fs)

    @staticmethod
    def catenary_of_set(fs: FactorizationSet) -> int:
        """Bottleneck weight of a minimum spanning tree of the distance graph"""
        fs.require_complete()
        n = len(fs)
        if n <= 1:
            return 0
        vectors = fs.exponent_vectors()
        distances = InvariantCalculator.distance_matrix(vectors, vectors)
        rows, cols = np.triu_indices(n, k=1)
        weights = distances[rows, cols]
        components = DisjointSet(n)
        for edge in np.argsort(weights, kind="stable"):
            if components.union(int(rows[edge]), int(cols[edge])) and components.count == 1:
                return int(weights[edge])
        return 0

    @staticmethod
    def tame_degree(monoid, a, x, budget: Optional[int] = None) -> int:
        return InvariantCalculator.tame_degree_result(monoid, a, x, budget).value

    @staticmethod
    def tame_degree_result(monoid, a, x, budget: Optional[int] = None) -> TameDegree:
        """Least N != 1 such that every z in Z(a) is within N of a z' in Z(a) dividing by x.

        A raw distance of 1 only arises without cancellativity; it is reported as 2
        and the result keeps both values.
        """
        fs = FactorEngine.factorizations(monoid, a, budget).require_complete()
        sub = x.exponents if isinstance(x, Factorization) else tuple(x)
        vectors = fs.exponent_vectors()
        if vectors and len(sub) != len(vectors[0]):
            raise TagMismatch(
                f"Sub-factorization has {len(sub)} entries, atoms number {len(vectors[0])}"
            )

        containing = [z for z in vectors if all(e >= s for e, s in zip(z, sub))]
        if not containing:
            return TameDegree(value=0, raw=0)
        raw = int(InvariantCalculator.distance_matrix(vectors, containing).min(axis=1).max())
        if raw == 1:
            logger.warning(f"Tame degree of {a!r} at {sub} would be 1; reporting 2")
            return TameDegree(value=2, raw=raw)
        return TameDegree(value=raw, raw=raw)

    # --- powers -----------------------------------------------------------

    @staticmethod
    def power_stats(monoid, x, n: int, budget: Optional[int] = None) -> LengthStats:
        return InvariantCalculator.element_stats(
            monoid, MonoidBuilder.scale_element(monoid, x, n), budget
        )

    @staticmethod
    def asymptotic_ld(
        monoid,
        x,
        terms: int,
        tolerance: Fraction = Fraction(1, 10),
        budget: Optional[int] = None,
    ) -> AsymptoticReport:
        """ld(x^n) for n = 1..terms, and the limit 1/min delta predicted from the gaps seen.

        Gaps come from the powers themselves. Numerical semigroups also add the
        delta sets of every divisor of the last power; other kinds have no cheap
        divisor enumeration, so for them min_delta may exceed the true one.
        """
        x = MonoidBuilder.coerce_element(monoid, x)
        gaps = set()
        rows = []
        for n in range(1, terms + 1):
            stats = InvariantCalculator.power_stats(monoid, x, n, budget)
            gaps.update(stats.delta)
            rows.append(AsymptoticTerm(n=n, ld=stats.ld))

        if isinstance(monoid, NumericalSemigroup):
            top = MonoidBuilder.scale_element(monoid, x, terms)
            for y in range(1, top):
                if MonoidBuilder.contains(monoid, y) and MonoidBuilder.contains(monoid, top - y):
                    gaps.update(InvariantCalculator.element_stats(monoid, y).delta)

        min_delta = min(gaps) if gaps else None
        limit = Fraction(1, min_delta) if min_delta else None
        converged = False
        if limit is not None:
            tail = rows[-ceil(terms / 4):]
            converged = all(t.ld is not None and abs(t.ld - limit) <= tolerance for t in tail)

        logger.info(
            f"Asymptotic scan of {x!r} over {terms} powers: limit {limit}, converged {converged}"
        )
        return AsymptoticReport(
            base=x,
            terms=tuple(rows),
            min_delta=min_delta,
            predicted_limit=limit,
            tolerance=tolerance,
            converged=converged,
        )

    @staticmethod
    def sandwich_check(monoid, x, n: int, d: int, tame: Fraction, budget: Optional[int] = None) -> bool:
        """1/d - 2T/(n d^2) <= ld(x^n) <= 1/d"""
        ld = InvariantCalculator.power_stats(monoid, x, n, budget).ld
        if ld is None:
            return False
        upper = Fraction(1, d)
        lower = upper - Fraction(2) * Fraction(tame) / (n * d * d)
        return lower <= ld <= upper

    @staticmethod
    def default_psi(monoid, x, d: int, n_max: int, budget: Optional[int] = None) -> Optional[int]:
        """Least n <= n_max with d in delta(x^n)"""
        for n in range(1, n_max + 1):
            if d in InvariantCalculator.power_stats(monoid, x, n, budget).delta:
                return n
        return None

    @staticmethod
    def measure_tame_constant(
        monoid, x, psi: int, n_max: int, budget: Optional[int] = None
    ) -> int:
        """Largest tame degree of x^n, psi <= n <= n_max, at factorizations of x^psi"""
        base = MonoidBuilder.scale_element(monoid, x, psi)
        subs = FactorEngine.factorizations(monoid, base, budget).require_complete()
        worst = 0
        for n in range(psi, n_max + 1):
            power = MonoidBuilder.scale_element(monoid, x, n)
            for z in subs.factorizations:
                worst = max(worst, InvariantCalculator.tame_degree(monoid, power, z, budget))
        return worst
