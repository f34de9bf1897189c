"""
Number-theoretic helpers: Apery sets, representability, denominator
clearing and length bitmasks
"""

import heapq
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class NumberTheoryUtils:
    """Utility class for exact integer and rational arithmetic"""

    @staticmethod
    def apery_set(generators: Sequence[int]) -> List[int]:
        """Least element of <generators> in each residue class mod the smallest generator"""
        m = min(generators)
        dist: List[Optional[int]] = [None] * m
        dist[0] = 0
        heap = [(0, 0)]
        while heap:
            value, residue = heapq.heappop(heap)
            if value != dist[residue]:
                continue
            for g in generators:
                nxt = value + g
                r = nxt % m
                if dist[r] is None or nxt < dist[r]:
                    dist[r] = nxt
                    heapq.heappush(heap, (nxt, r))
        return dist

    @staticmethod
    def frobenius_number(generators: Sequence[int]) -> int:
        apery = NumberTheoryUtils.apery_set(generators)
        return max(apery) - min(generators)

    @staticmethod
    def is_representable(value: int, generators: Sequence[int]) -> bool:
        """True when value is a nonnegative integer combination of generators"""
        if value == 0:
            return True
        if value < 0 or not generators:
            return False
        limit = (1 << (value + 1)) - 1
        reach = 1
        for g in generators:
            step = g
            while step <= value:
                reach = (reach | (reach << step)) & limit
                step <<= 1
        return bool(reach >> value & 1)

    @staticmethod
    def is_rational_combination(target: Fraction, values: Sequence[Fraction]) -> bool:
        """True when target is a nonnegative integer combination of values"""
        ordered = sorted(values, reverse=True)

        def search(pos: int, remaining: Fraction) -> bool:
            if remaining == 0:
                return True
            if pos == len(ordered):
                return False
            v = ordered[pos]
            for c in range(int(remaining // v), -1, -1):
                if search(pos + 1, remaining - c * v):
                    return True
            return False

        return search(0, target)

    @staticmethod
    def coprime_part(q: int, others: Sequence[int]) -> int:
        """Largest divisor of q sharing no prime with any of the others"""
        m = q
        for o in others:
            g = gcd(m, o)
            while g > 1:
                m //= g
                g = gcd(m, o)
        return m

    @staticmethod
    def clear_denominators(atoms: Sequence[Fraction]) -> Tuple[int, List[int]]:
        """Common denominator L and the integers a*L"""
        common = lcm(*(a.denominator for a in atoms))
        return common, [int(a * common) for a in atoms]

    @staticmethod
    def atom_moduli(atoms: Sequence[Fraction]) -> List[int]:
        """Per-atom modulus forcing the exponent into one residue class (1 = none)"""
        dens = [a.denominator for a in atoms]
        return [
            NumberTheoryUtils.coprime_part(q, dens[:i] + dens[i + 1 :])
            for i, q in enumerate(dens)
        ]

    @staticmethod
    def exponent_residues(
        scaled_atoms: Sequence[int], moduli: Sequence[int], scaled_target: int
    ) -> Dict[int, Tuple[int, int]]:
        """Map atom index to (modulus, residue) of its exponent in any factorization"""
        residues = {}
        for i, (a, m) in enumerate(zip(scaled_atoms, moduli)):
            if m > 1:
                residues[i] = (m, scaled_target * pow(a, -1, m) % m)
        return residues

    @staticmethod
    def mask_sumset(first: int, second: int) -> int:
        """Bitmask of {i + j : i in first, j in second}"""
        result = 0
        while first:
            low = first & -first
            result |= second << (low.bit_length() - 1)
            first ^= low
        return result

    @staticmethod
    def gaps(lengths: Sequence[int]) -> List[int]:
        """Distinct consecutive differences of an increasing sequence"""
        return sorted({b - a for a, b in zip(lengths, lengths[1:])})
