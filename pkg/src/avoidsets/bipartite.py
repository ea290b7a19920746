"""Two-coloring with odd-cycle certificates, and a parity union-find."""

from __future__ import annotations

from collections import deque
from typing import Sequence


def two_color(adjacency: Sequence[Sequence[int]]) -> tuple[list[int] | None, list[int] | None]:
    """Breadth-first 2-coloring of the graph on vertices ``0 .. len-1``.

    Returns ``(colors, None)`` with colors in {0, 1}, or ``(None, cycle)``
    where ``cycle`` is a simple cycle of odd length.  Components are rooted
    at their least vertex and the root gets color 0.
    """
    n = len(adjacency)
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            cv = color[v]
            for w in adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - cv
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == cv:
                    return None, _odd_cycle(v, w, parent, depth)
    return color, None


def _odd_cycle(v, w, parent, depth):
    left, right = [v], [w]
    a, b = v, w
    while a != b:
        if depth[a] >= depth[b]:
            a = parent[a]
            left.append(a)
        else:
            b = parent[b]
            right.append(b)
    return left + right[-2::-1]


def is_odd_cycle(cycle: Sequence[int], adjacent) -> bool:
    """Odd length >= 3, distinct vertices, consecutive (cyclic) pairs adjacent."""
    k = len(cycle)
    if k < 3 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    return all(adjacent(cycle[i], cycle[(i + 1) % k]) for i in range(k))


class ParityDSU:
    """Union-find that tracks the color parity of each vertex to its root.

    ``link(a, b)`` records that ``a`` and ``b`` get different colors and
    returns False if that contradicts what is already known.
    """

    __slots__ = ("parent", "parity")

    def __init__(self, n: int = 0):
        self.parent = list(range(n))
        self.parity = [0] * n

    def copy(self) -> "ParityDSU":
        new = ParityDSU.__new__(ParityDSU)
        new.parent = self.parent[:]
        new.parity = self.parity[:]
        return new

    def find(self, x: int) -> tuple[int, int]:
        parent, parity = self.parent, self.parity
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        root = x
        # compress, accumulating parity from the top down
        acc = 0
        for y in reversed(path):
            acc ^= parity[y]
            parity[y] = acc
            parent[y] = root
        return root, (parity[path[0]] if path else 0)

    def link(self, a: int, b: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return pa != pb
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ 1
        return True

    def colors(self) -> list[int]:
        return [self.find(x)[1] for x in range(len(self.parent))]
