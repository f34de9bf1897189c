"""
Zero-sum sequences over finite abelian groups: minimal zero-sum sequences,
Davenport constants and block-monoid presentations
"""

import logging
from itertools import product
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from models.errors import BudgetExceeded, DimensionMismatch, EmptyGenerators, NotInMonoid
from models.group import FiniteAbelianGroup, ZeroSumSequence
from models.monoid import BlockMonoid
from utils.parsing_utils import SpecParser

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

DEFAULT_BUDGET = 5_000_000


class BlockMonoidUtils:
    """Utility class for block monoids B(G, S)"""

    @staticmethod
    def normalise_support(
        group: FiniteAbelianGroup, subset: Optional[Sequence[Sequence[int]]] = None
    ) -> Tuple[Vector, ...]:
        """Reduced, duplicate-free residue vectors; all of G when no subset is given"""
        if subset is None:
            return tuple(group.elements())
        support: List[Vector] = []
        for g in subset:
            if len(g) != group.rank:
                raise DimensionMismatch(
                    f"{tuple(g)} does not match the {group.rank} factors of {group.label()}"
                )
            reduced = group.reduce(g)
            if reduced not in support:
                support.append(reduced)
        if not support:
            raise EmptyGenerators("The subset S must be nonempty")
        return tuple(support)

    @staticmethod
    def _zero_sum_free(
        group: FiniteAbelianGroup,
        support: Sequence[Vector],
        max_len: int,
        budget: int,
    ) -> Iterator[Tuple[Tuple[int, ...], Vector]]:
        """Zero-sum-free multisets over support (as nondecreasing index tuples) and their sums.

        Includes the empty multiset. Each multiset carries its set of nonempty
        subsums; extending by s is allowed while 0 stays out of that set.
        """
        zero = group.zero()
        nodes = 0
        stack: List[Tuple[Tuple[int, ...], Vector, FrozenSet[Vector]]] = [((), zero, frozenset())]
        while stack:
            indices, total, subsums = stack.pop()
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(
                    f"Zero-sum search over {group.label()} exceeded {budget} nodes"
                )
            yield indices, total
            if len(indices) >= max_len:
                continue
            start = indices[-1] if indices else 0
            # Reverse push keeps the pop order ascending by index
            for i in range(len(support) - 1, start - 1, -1):
                s = support[i]
                if s == zero:
                    continue
                shifted = {group.add(t, s) for t in subsums}
                if zero in shifted:
                    continue
                stack.append(
                    (indices + (i,), group.add(total, s), subsums | shifted | {s})
                )

    @staticmethod
    def zero_sum_atoms(
        group: FiniteAbelianGroup,
        subset: Optional[Sequence[Sequence[int]]] = None,
        max_len: Optional[int] = None,
        budget: int = DEFAULT_BUDGET,
    ) -> List[ZeroSumSequence]:
        """Minimal zero-sum sequences over S of length at most max_len (default D(G))"""
        support = BlockMonoidUtils.normalise_support(group, subset)
        if max_len is None:
            max_len = BlockMonoidUtils.davenport(group, budget)
        position = {g: i for i, g in enumerate(support)}

        found = set()
        for indices, total in BlockMonoidUtils._zero_sum_free(
            group, support, max_len - 1, budget
        ):
            closing = group.negate(total)
            if closing not in position:
                continue
            counts = [0] * len(support)
            for i in indices:
                counts[i] += 1
            counts[position[closing]] += 1
            found.add(tuple(counts))

        ordered = sorted(found, key=lambda m: (sum(m), tuple(-c for c in m)))
        logger.info(
            f"Found {len(ordered)} minimal zero-sum sequences over {len(support)} elements of {group.label()}"
        )
        return [ZeroSumSequence.over(group, support, m) for m in ordered]

    @staticmethod
    def davenport(group: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> int:
        """1 + the longest zero-sum-free sequence over G"""
        support = tuple(group.elements())
        longest = 0
        for indices, _ in BlockMonoidUtils._zero_sum_free(
            group, support, group.order, budget
        ):
            longest = max(longest, len(indices))
        return longest + 1

    @staticmethod
    def block_presentation(
        group: FiniteAbelianGroup,
        subset: Optional[Sequence[Sequence[int]]] = None,
        budget: int = DEFAULT_BUDGET,
    ) -> BlockMonoid:
        support = BlockMonoidUtils.normalise_support(group, subset)
        davenport = BlockMonoidUtils.davenport(group, budget)
        atoms = BlockMonoidUtils.zero_sum_atoms(group, support, davenport, budget)
        monoid = BlockMonoid(
            group=group,
            support=support,
            atoms=tuple(a.multiplicities for a in atoms),
            davenport=davenport,
        )
        logger.info(f"Built {monoid.label()} with {len(atoms)} atoms, D(G) = {davenport}")
        return monoid

    @staticmethod
    def parse_sequence(monoid: BlockMonoid, text: str) -> Vector:
        """'1^5(4)^5' -> multiplicity vector over the support"""
        counts = [0] * len(monoid.support)
        for residues, k in SpecParser.parse_sequence_tokens(text):
            if len(residues) != monoid.group.rank:
                raise DimensionMismatch(
                    f"{residues} does not match the {monoid.group.rank} factors of {monoid.group.label()}"
                )
            g = monoid.group.reduce(residues)
            if g not in monoid.support:
                raise NotInMonoid(f"{g} is not in the support of {monoid.label()}")
            counts[monoid.support.index(g)] += k
        return tuple(counts)

    @staticmethod
    def sequence_sum(group: FiniteAbelianGroup, support: Sequence[Vector], counts: Sequence[int]) -> Vector:
        total = group.zero()
        for g, k in zip(support, counts):
            total = group.add(total, group.scale(g, k))
        return total

    @staticmethod
    def is_minimal_zero_sum(
        group: FiniteAbelianGroup, support: Sequence[Vector], counts: Sequence[int]
    ) -> bool:
        """Zero-sum, nonempty, and no proper nonempty zero-sum subsequence"""
        zero = group.zero()
        if not any(counts) or BlockMonoidUtils.sequence_sum(group, support, counts) != zero:
            return False
        for sub in product(*(range(k + 1) for k in counts)):
            if not any(sub) or tuple(sub) == tuple(counts):
                continue
            if BlockMonoidUtils.sequence_sum(group, support, sub) == zero:
                return False
        return True
