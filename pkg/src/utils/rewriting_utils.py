"""
Relation rewriting for finitely presented monoids
"""

import logging
import threading
from collections import OrderedDict, deque
from typing import FrozenSet, Sequence, Tuple

from models.errors import BudgetExceeded

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
Relation = Tuple[Vector, Vector]

# Cached words across all classes before the oldest are dropped
MAX_CACHED_WORDS = 500_000


class RewritingUtils:
    """Equivalence classes of words under a list of relations"""

    # Completed classes, shared by every word they contain
    _cache: "OrderedDict[Tuple[Tuple[Relation, ...], Vector], FrozenSet[Vector]]" = OrderedDict()
    _lock = threading.Lock()

    @staticmethod
    def apply(word: Vector, source: Vector, target: Vector) -> Vector:
        return tuple(w - s + t for w, s, t in zip(word, source, target))

    @staticmethod
    def divides(source: Vector, word: Vector) -> bool:
        return all(s <= w for s, w in zip(source, word))

    @staticmethod
    def closure(
        relations: Sequence[Relation], word: Vector, budget: int
    ) -> Tuple[FrozenSet[Vector], bool]:
        """All words reachable from `word` by applying relations either way.

        Returns the class and whether it was exhausted within `budget` words.
        """
        key = (tuple(relations), tuple(word))
        with RewritingUtils._lock:
            cached = RewritingUtils._cache.get(key)
            if cached is not None:
                RewritingUtils._cache.move_to_end(key)
        if cached is not None:
            logger.debug(f"Rewriting cache hit for {word}")
            return cached, True

        seen = {tuple(word)}
        queue = deque(seen)
        complete = True
        while queue:
            current = queue.popleft()
            for left, right in relations:
                for source, target in ((left, right), (right, left)):
                    if not RewritingUtils.divides(source, current):
                        continue
                    rewritten = RewritingUtils.apply(current, source, target)
                    if rewritten not in seen:
                        seen.add(rewritten)
                        queue.append(rewritten)
            if len(seen) > budget:
                complete = False
                break

        result = frozenset(seen)
        if complete:
            with RewritingUtils._lock:
                for member in result:
                    RewritingUtils._cache[(key[0], member)] = result
                while len(RewritingUtils._cache) > MAX_CACHED_WORDS:
                    RewritingUtils._cache.popitem(last=False)
        else:
            logger.warning(
                f"Rewriting class of {word} exceeded {budget} words; result is partial"
            )
        return result, complete

    @staticmethod
    def canonical(relations: Sequence[Relation], word: Vector, budget: int) -> Vector:
        """Lexicographically least word of the class"""
        members, complete = RewritingUtils.closure(relations, word, budget)
        if not complete:
            # A partial class can miss its least word
            raise BudgetExceeded(f"Rewriting class of {word} exceeded {budget} words")
        return min(members)

    @staticmethod
    def clear_cache() -> None:
        with RewritingUtils._lock:
            RewritingUtils._cache.clear()

    @staticmethod
    def cache_size() -> int:
        with RewritingUtils._lock:
            return len(RewritingUtils._cache)
