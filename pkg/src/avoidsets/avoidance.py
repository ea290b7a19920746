"""Associated graphs, avoidability decisions and saturated-set search.

A subset ``U`` of a group is avoidable when the group splits into two parts
with no element of ``U`` equal to a product (in either order) of two distinct
elements of the same part.  Equivalently the associated graph, with an edge
``{x, y}`` whenever ``x*y`` or ``y*x`` lies in ``U``, is bipartite.

Colors are encoded as 0 (part A) and 1 (part B).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .bipartite import ParityDSU, is_odd_cycle, two_color
from .groups import Group, as_subset, even_elements, subset_mask

__all__ = [
    "AssociatedGraph",
    "AvoidabilityOutcome",
    "SearchBudget",
    "BudgetExceeded",
    "NotAvoidable",
    "build_associated_graph",
    "decide_avoidable",
    "verify_avoiding_partition",
    "is_saturated",
    "saturate",
    "enumerate_saturated_sets",
    "max_avoidable_containing_even",
]


class NotAvoidable(ValueError):
    """Raised when an operation needs an avoidable input set."""


class BudgetExceeded(RuntimeError):
    """A search would exceed its budget.  ``partial`` holds what was found."""

    def __init__(self, message, partial=None, nodes=0):
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exhaustive searches.

    ``max_order`` is checked up front; ``max_nodes`` and ``max_seconds``
    abort a running search.
    """

    max_order: int = 32
    max_nodes: int | None = 2_000_000
    max_seconds: float | None = None

    def admit(self, g: Group) -> None:
        if g.order > self.max_order:
            raise BudgetExceeded(
                f"{g.spec} has order {g.order} > budget max_order={self.max_order}"
            )

    def meter(self) -> "_Meter":
        return _Meter(self)


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self, partial):
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"node budget {b.max_nodes} exhausted", partial, self.nodes)
        if b.max_seconds is not None and self.nodes % 512 == 0:
            if time.monotonic() - self.start > b.max_seconds:
                raise BudgetExceeded(f"time budget {b.max_seconds}s exhausted", partial, self.nodes)


@dataclass(frozen=True)
class AssociatedGraph:
    group: Group
    target: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.adjacency[x]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def edges(self):
        for x, nbrs in enumerate(self.adjacency):
            for y in nbrs:
                if x < y:
                    yield x, y


@dataclass(frozen=True)
class AvoidabilityOutcome:
    """Verdict plus a checkable certificate.

    ``coloring`` (per-element 0/1) when avoidable, ``cycle`` (odd, closed
    implicitly) when not.
    """

    avoidable: bool
    coloring: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.avoidable

    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if self.coloring is None:
            raise NotAvoidable("no avoiding partition")
        a = tuple(i for i, c in enumerate(self.coloring) if c == 0)
        b = tuple(i for i, c in enumerate(self.coloring) if c == 1)
        return a, b


def _neighbors(g: Group, x: int, u: Sequence[int]) -> set[int]:
    xi = g.inv(x)
    if g.rows is not None:
        row = g.rows[xi]
        out = {row[t] for t in u}
        out.update(g.rows[t][xi] for t in u)
    else:
        out = {g.mul(xi, t) for t in u}
        out.update(g.mul(t, xi) for t in u)
    out.discard(x)
    return out


def build_associated_graph(g: Group, u: Iterable[int]) -> AssociatedGraph:
    """Graph on the group with ``x ~ y`` (``x != y``) iff ``x*y`` or ``y*x`` is in ``u``."""
    u = as_subset(g, u)
    if g.table is not None and u:
        # y with x*y = t is inv(x)*t; y with y*x = t is t*inv(x)
        T, inv = g.table, g.inverse
        left = T[inv][:, u]
        right = T[np.asarray(u)][:, inv].T
        both = np.concatenate([left, right], axis=1)
        both.sort(axis=1)
        adj = []
        for x, row in enumerate(both.tolist()):
            nb = sorted(set(row))
            if nb and x in nb:
                nb.remove(x)
            adj.append(tuple(nb))
    else:
        adj = [tuple(sorted(_neighbors(g, x, u))) for x in range(g.order)]
    return AssociatedGraph(g, u, tuple(adj))


def decide_avoidable(g: Group, u: Iterable[int]) -> AvoidabilityOutcome:
    """2-color the associated graph; return a witness or an odd cycle."""
    graph = build_associated_graph(g, u)
    colors, cycle = two_color(graph.adjacency)
    if colors is None:
        return AvoidabilityOutcome(False, cycle=tuple(cycle))
    return AvoidabilityOutcome(True, coloring=tuple(colors))


def verify_avoiding_partition(g: Group, u: Iterable[int], coloring: Sequence[int]) -> bool:
    """Trusted checker: no two distinct same-colored elements multiply into ``u``."""
    u = as_subset(g, u)
    if len(coloring) != g.order or any(c not in (0, 1) for c in coloring):
        return False
    if not u:
        return True
    color = np.asarray(coloring)
    if g.table is not None:
        in_u = np.isin(g.table, u)
        hits = in_u | in_u.T
        same = color[:, None] == color[None, :]
        np.fill_diagonal(same, False)
        return not bool((hits & same).any())
    # large groups: for each x the partners y with x*y or y*x in u
    for x in range(g.order):
        for y in _neighbors(g, x, u):
            if color[x] == color[y]:
                return False
    return True


def verify_odd_cycle(g: Group, u: Iterable[int], cycle: Sequence[int]) -> bool:
    """Check an unavoidability certificate against the edge rule directly."""
    uset = set(as_subset(g, u))

    def adjacent(x, y):
        return x != y and (g.mul(x, y) in uset or g.mul(y, x) in uset)

    return is_odd_cycle(list(cycle), adjacent)


# ---------------------------------------------------------------------------
# incremental engine shared by the searches


class _Engine:
    """Per-group edge lists ``pairs[t]``: all ``{x, y}`` joined because of ``t``."""

    def __init__(self, g: Group):
        self.g = g
        self._pairs: dict[int, tuple[tuple[int, int], ...]] = {}

    def pairs(self, t: int):
        got = self._pairs.get(t)
        if got is None:
            g = self.g
            found = set()
            for x in range(g.order):
                for y in _neighbors(g, x, (t,)):
                    found.add((x, y) if x < y else (y, x))
            got = self._pairs[t] = tuple(sorted(found))
        return got

    def dsu_for(self, u: Iterable[int]) -> ParityDSU | None:
        d = ParityDSU(self.g.order)
        for t in u:
            if not self.add(d, t):
                return None
        return d

    def add(self, d: ParityDSU, t: int) -> bool:
        link = d.link
        for a, b in self.pairs(t):
            if not link(a, b):
                return False
        return True

    def extended(self, d: ParityDSU, t: int) -> ParityDSU | None:
        c = d.copy()
        return c if self.add(c, t) else None


@lru_cache(maxsize=32)
def _engine(g: Group) -> _Engine:
    return _Engine(g)


def is_saturated(g: Group, u: Iterable[int]) -> bool:
    """Avoidable, and no single further element keeps it avoidable."""
    u = as_subset(g, u)
    eng = _engine(g)
    d = eng.dsu_for(u)
    if d is None:
        return False
    members = set(u)
    return all(eng.extended(d, z) is None for z in range(g.order) if z not in members)


def saturate(g: Group, u: Iterable[int]) -> tuple[int, ...]:
    """Greedy saturated superset: add elements in ascending index order."""
    u = as_subset(g, u)
    eng = _engine(g)
    d = eng.dsu_for(u)
    if d is None:
        raise NotAvoidable(f"{sorted(u)} is not avoidable in {g.spec}")
    members = set(u)
    for z in range(g.order):
        if z in members:
            continue
        nxt = eng.extended(d, z)
        if nxt is not None:
            d = nxt
            members.add(z)
    return tuple(sorted(members))


def enumerate_saturated_sets(g: Group, budget: SearchBudget | None = None) -> list[tuple[int, ...]]:
    """All saturated sets of ``g`` by exhaustive search, sorted lexicographically.

    Depth-first over avoidable sets, each extended only by elements above its
    maximum, so every avoidable set is visited once and in lexicographic
    order.  A set ``u ∪ {z}`` with ``z < max(u)`` sorts before ``u``, hence
    its avoidability is already recorded in ``seen`` when ``u`` is examined.
    """
    budget = budget or SearchBudget()
    budget.admit(g)
    meter = budget.meter()
    eng = _engine(g)
    n = g.order
    seen: set[int] = set()
    found: list[tuple[int, ...]] = []
    # stack entries: (members, mask, dsu)
    stack = [((), 0, ParityDSU(n))]
    while stack:
        u, mask, d = stack.pop()
        meter.tick(found)
        seen.add(mask)
        top = u[-1] if u else -1
        children = []
        for z in range(top + 1, n):
            c = eng.extended(d, z)
            if c is not None:
                children.append((u + (z,), mask | (1 << z), c))
        if not children:
            maximal = all(
                (mask | (1 << z)) not in seen for z in range(top) if not mask >> z & 1
            )
            if maximal:
                found.append(u)
        stack.extend(reversed(children))
    found.sort()
    return found


def max_avoidable_containing_even(g: Group, budget: SearchBudget | None = None) -> int:
    """Largest avoidable set containing at least one even element (exact).

    Branch and bound over the same lexicographic search tree; a branch is cut
    when even taking every extendable candidate cannot beat the best size, or
    when it has no even element and no even candidate remains.
    """
    budget = budget or SearchBudget()
    budget.admit(g)
    meter = budget.meter()
    eng = _engine(g)
    n = g.order
    evens = set(even_elements(g))
    best = 0
    stack = [((), False, ParityDSU(n))]
    while stack:
        u, has_even, d = stack.pop()
        meter.tick([])
        if has_even and len(u) > best:
            best = len(u)
        top = u[-1] if u else -1
        cands = []
        for z in range(top + 1, n):
            c = eng.extended(d, z)
            if c is not None:
                cands.append((z, c))
        if len(u) + len(cands) <= best:
            continue
        if not has_even and not any(z in evens for z, _ in cands):
            continue
        for i in range(len(cands) - 1, -1, -1):
            z, c = cands[i]
            # later siblings only see candidates above z
            if len(u) + 1 + (len(cands) - i - 1) <= best:
                continue
            stack.append((u + (z,), has_even or z in evens, c))
    return best
