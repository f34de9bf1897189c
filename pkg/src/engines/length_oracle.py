"""
Lengths-only oracles: bitmask tables per monoid, shared across calls
"""

import logging
import threading
from collections import OrderedDict
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from models.errors import BudgetExceeded
from engines.lattice_search import LatticeSearch
from utils.number_theory import NumberTheoryUtils

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# Per-monoid tables kept before the least recently used one is dropped
MAX_CACHED_MONOIDS = 32
MAX_PUISEUX_ENTRIES = 4096


class LengthOracle:
    """Length sets as bitmasks (bit k set iff some factorization has length k).

    Numerical semigroups keep one growing table indexed by value. Affine and
    block monoids memoize on the target vector, using a numpy mask to find the
    atoms that divide it. Puiseux truncations run the lattice search in
    lengths-only mode after clearing denominators.
    """

    _numerical_tables: "OrderedDict[Tuple[int, ...], List[int]]" = OrderedDict()
    _vector_tables: "OrderedDict[Tuple[Vector, ...], Dict[Vector, int]]" = OrderedDict()
    _puiseux_cache: "OrderedDict[Tuple[Tuple[Fraction, ...], Fraction], int]" = OrderedDict()
    _lock = threading.RLock()

    @staticmethod
    def _touch(cache: OrderedDict, key, default: Any, limit: int) -> Any:
        """Entry for `key`, inserted if missing and marked most recent; caller holds the lock"""
        if key in cache:
            cache.move_to_end(key)
            return cache[key]
        cache[key] = default
        while len(cache) > limit:
            evicted, _ = cache.popitem(last=False)
            logger.debug(f"Evicted cached lengths of {evicted}")
        return default

    @staticmethod
    def numerical(generators: Sequence[int], value: int) -> int:
        if value < 0:
            return 0
        key = tuple(generators)
        with LengthOracle._lock:
            table = LengthOracle._touch(
                LengthOracle._numerical_tables, key, [1], MAX_CACHED_MONOIDS
            )
            if len(table) <= value:
                start = len(table)
                for v in range(start, value + 1):
                    bits = 0
                    for g in key:
                        if g > v:
                            break
                        bits |= table[v - g]
                    table.append(bits << 1)
                logger.debug(f"Grew length table of {key} from {start} to {value}")
            return table[value]

    @staticmethod
    def vector(atoms: Sequence[Vector], target: Vector) -> int:
        key = tuple(tuple(a) for a in atoms)
        matrix = np.array(key, dtype=np.int64)
        target = tuple(target)
        with LengthOracle._lock:
            memo = LengthOracle._touch(
                LengthOracle._vector_tables, key, {}, MAX_CACHED_MONOIDS
            )
            cached = memo.get(target)
        if cached is not None:
            return cached

        # Shared entries are only read here; new ones are merged back under the lock
        local: Dict[Vector, int] = {tuple(0 for _ in target): 1}

        def known(v: Vector):
            found = local.get(v)
            return memo.get(v) if found is None else found

        stack = [target]
        while stack:
            current = stack[-1]
            if known(current) is not None:
                stack.pop()
                continue
            mask = np.all(matrix <= np.array(current, dtype=np.int64), axis=1)
            subs = [
                tuple(c - a for c, a in zip(current, key[i]))
                for i in np.flatnonzero(mask)
            ]
            pending = [s for s in subs if known(s) is None]
            if pending:
                stack.extend(pending)
                continue
            bits = 0
            for s in subs:
                bits |= known(s)
            local[current] = bits << 1
            stack.pop()

        result = known(target)
        with LengthOracle._lock:
            memo.update(local)
        return result

    @staticmethod
    def puiseux(atoms: Sequence[Fraction], value: Fraction, budget: int) -> int:
        key = (tuple(atoms), Fraction(value))
        with LengthOracle._lock:
            cached = LengthOracle._puiseux_cache.get(key)
            if cached is not None:
                LengthOracle._puiseux_cache.move_to_end(key)
        if cached is not None:
            logger.debug(f"Puiseux length cache hit for {value}")
            return cached

        common, scaled = NumberTheoryUtils.clear_denominators(atoms)
        scaled_value = value * common
        if scaled_value.denominator != 1 or value < 0:
            return 0
        target = int(scaled_value)
        residues = NumberTheoryUtils.exponent_residues(
            scaled, NumberTheoryUtils.atom_moduli(atoms), target
        )
        outcome = LatticeSearch.run(
            [(a,) for a in scaled], (target,), budget, residues, lengths_only=True
        )
        if not outcome.complete:
            raise BudgetExceeded(
                f"Length set of {value} not exhausted within {budget} search nodes"
            )

        bits = 0
        for length in outcome.lengths:
            bits |= 1 << length
        with LengthOracle._lock:
            LengthOracle._touch(LengthOracle._puiseux_cache, key, bits, MAX_PUISEUX_ENTRIES)
        logger.debug(f"Puiseux lengths of {value}: {len(outcome.lengths)} values")
        return bits

    @staticmethod
    def clear_cache() -> None:
        with LengthOracle._lock:
            LengthOracle._numerical_tables.clear()
            LengthOracle._vector_tables.clear()
            LengthOracle._puiseux_cache.clear()

    @staticmethod
    def cache_stats() -> Dict[str, int]:
        with LengthOracle._lock:
            return {
                "numerical_tables": len(LengthOracle._numerical_tables),
                "vector_tables": len(LengthOracle._vector_tables),
                "puiseux_entries": len(LengthOracle._puiseux_cache),
            }
