"""
Union-find over a fixed index range
"""

from typing import Dict, List, Tuple


class DisjointSet:
    """Union-find with path halving and union by size"""

    def __init__(self, size: int):
        self._parent = list(range(size))
        self._size = [1] * size
        self.count = size

    def find(self, i: int) -> int:
        parent = self._parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        """Merge the sets of i and j; False if they were already joined"""
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        if self._size[ri] < self._size[rj]:
            ri, rj = rj, ri
        self._parent[rj] = ri
        self._size[ri] += self._size[rj]
        self.count -= 1
        return True

    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """Components as sorted index tuples, ordered by smallest member"""
        groups: Dict[int, List[int]] = {}
        for i in range(len(self._parent)):
            groups.setdefault(self.find(i), []).append(i)
        return tuple(sorted(tuple(g) for g in groups.values()))
