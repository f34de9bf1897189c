"""
Pruned depth-first enumeration of nonnegative solutions to sum c_i * a_i = t
"""

import logging
from math import gcd
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class SearchOutcome(NamedTuple):
    """Raw result of one lattice search"""

    solutions: Tuple[Vector, ...]
    lengths: FrozenSet[int]
    complete: bool
    nodes: int


class LatticeSearch:
    """Change-making search over atom vectors with divisibility and residue pruning.

    Atoms are visited by descending residue modulus, then descending degree.
    Before branching on an atom the remaining target must be divisible,
    coordinate by coordinate, by the gcd of the atoms still to come; a
    coordinate only the current atom can cover forces its exponent. Atoms
    carrying a (modulus, residue) constraint only take exponents in that class.
    """

    @staticmethod
    def run(
        atoms: Sequence[Vector],
        target: Vector,
        budget: int,
        residues: Optional[Dict[int, Tuple[int, int]]] = None,
        lengths_only: bool = False,
        stop_after_first: bool = False,
    ) -> SearchOutcome:
        residues = residues or {}
        k = len(atoms)
        d = len(target)

        usable = [
            i for i in range(k) if all(a <= t for a, t in zip(atoms[i], target))
        ]
        for i, (m, r) in residues.items():
            if i not in usable and r % m:
                return SearchOutcome((), frozenset(), True, 0)

        order = sorted(
            usable, key=lambda i: (-residues.get(i, (1, 0))[0], -sum(atoms[i]), i)
        )
        n = len(order)
        vecs = [tuple(atoms[i]) for i in order]
        mods = [residues.get(i, (1, 0)) for i in order]

        suffix_gcd: List[List[int]] = [[0] * d for _ in range(n + 1)]
        for p in range(n - 1, -1, -1):
            suffix_gcd[p] = [gcd(g, v) for g, v in zip(suffix_gcd[p + 1], vecs[p])]

        counts = [0] * n
        solutions: List[Vector] = []
        lengths = set()
        nodes = 0
        truncated = False
        done = False

        def record():
            nonlocal done
            if lengths_only:
                lengths.add(sum(counts))
            else:
                full = [0] * k
                for q, i in enumerate(order):
                    full[i] = counts[q]
                solutions.append(tuple(full))
                lengths.add(sum(counts))
            if stop_after_first:
                done = True

        def visit(p: int, remaining: Vector):
            nonlocal nodes, truncated
            if truncated or done:
                return
            nodes += 1
            if nodes > budget:
                truncated = True
                return

            for rem, g in zip(remaining, suffix_gcd[p]):
                if (g == 0 and rem) or (g and rem % g):
                    return
            if p == n:
                record()
                return

            vec = vecs[p]
            upper = min(rem // v for rem, v in zip(remaining, vec) if v)
            forced = None
            for rem, v, g in zip(remaining, vec, suffix_gcd[p + 1]):
                if v and g == 0:
                    if rem % v:
                        return
                    if forced is None:
                        forced = rem // v
                    elif forced != rem // v:
                        return

            m, r = mods[p]
            if forced is not None:
                candidates = [forced] if forced <= upper and forced % m == r else []
            else:
                candidates = range(r, upper + 1, m)

            for c in candidates:
                counts[p] = c
                visit(p + 1, tuple(rem - c * v for rem, v in zip(remaining, vec)))
                if truncated or done:
                    break
            counts[p] = 0

        visit(0, tuple(target))

        if truncated:
            logger.warning(
                f"Lattice search for {tuple(target)} stopped after {budget} nodes "
                f"with {len(lengths)} lengths found"
            )
        else:
            logger.debug(f"Lattice search for {tuple(target)} used {nodes} nodes")

        return SearchOutcome(
            tuple(sorted(solutions)), frozenset(lengths), not truncated, nodes
        )
