"""
This module provides the union-find structure behind every closure engine.
"""


class UnionFind:
    """Disjoint sets over 0..n-1 with union by rank and path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; return False if they were already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def canonical(self) -> tuple[int, ...]:
        """Class vector mapping each element to the smallest element of its set."""
        smallest: dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            out.append(smallest.setdefault(self.find(x), x))
        return tuple(out)

    def __len__(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.parent[x] == x)
