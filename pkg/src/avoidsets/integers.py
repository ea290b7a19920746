"""Avoidable and saturated finite subsets of the integers under addition.

Membership is decided by containment in one of the saturated families
(all-odd sets, ``{a, a+x, a+2x}`` with ``a`` even and ``x`` odd, and
``{a, a+4x}`` with ``a`` even, ``x != 0``).  Any finite window of the
integers can then be colored explicitly by walking the paths of the graph of
``{0, b}`` and pairing each path with its ``c``-complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .avoidance import AvoidabilityOutcome, NotAvoidable
from .bipartite import is_odd_cycle, two_color

__all__ = [
    "IntFamily",
    "integers_family",
    "integers_is_avoidable",
    "integers_is_saturated",
    "integers_partition_window",
    "integers_window_outcome",
    "verify_window_partition",
    "refutation_radius",
    "ALL_ODD",
]

ALL_ODD = "all-odd"


@dataclass(frozen=True)
class IntFamily:
    """A saturated family containing a given set.

    ``kind`` is ``"odd"``, ``"triple"`` (``{a, a+x, a+2x}``) or ``"pair"``
    (``{a, a+b}`` with ``b = 4x``); ``a`` is even and ``x``/``b`` positive.
    """

    kind: str
    a: int = 0
    step: int = 0

    @property
    def members(self) -> tuple[int, ...] | None:
        if self.kind == "triple":
            return (self.a, self.a + self.step, self.a + 2 * self.step)
        if self.kind == "pair":
            return (self.a, self.a + self.step)
        return None


def _as_intset(u: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(int(v) for v in u)))


def integers_family(u: Iterable[int]) -> IntFamily | None:
    """A saturated family containing ``u``, or None if ``u`` is unavoidable."""
    u = _as_intset(u)
    evens = [v for v in u if v % 2 == 0]
    odds = [v for v in u if v % 2]
    if not evens:
        return IntFamily("odd")
    if len(evens) > 2 or len(u) > 3:
        return None
    if len(evens) == 1:
        a = evens[0]
        if not odds:
            # {a} sits in {a, a+1, a+2}
            return IntFamily("triple", a, 1)
        if len(odds) > 1:
            return None
        x = odds[0] - a
        if x < 0:
            # {a+2x, a+x, a} with the even end first
            return IntFamily("triple", a + 2 * x, -x)
        return IntFamily("triple", a, x)
    lo, hi = evens
    gap = hi - lo
    if gap % 4 == 0:
        if odds:
            return None
        return IntFamily("pair", lo, gap)
    mid = (lo + hi) // 2
    if odds and odds != [mid]:
        return None
    return IntFamily("triple", lo, gap // 2)


def integers_is_avoidable(u: Iterable[int]) -> bool:
    return integers_family(u) is not None


def integers_is_saturated(u: Iterable[int]) -> bool:
    """True for ``{a,a+x,a+2x}`` (a even, x odd) and ``{a,a+4x}`` (a even, x != 0).

    The infinite all-odd family is not a finite set and is never reported here.
    """
    u = _as_intset(u)
    fam = integers_family(u)
    return fam is not None and fam.members == u


# -- window colorings ---------------------------------------------------------


def _path_coloring(b: int, c: int | None):
    """Coloring of Z avoiding ``{0, b}`` (and ``c = b/2`` odd, when given).

    Components of the graph of ``{0, b}`` are the paths through the residue
    classes ``{ρ, -ρ} mod b``.  Along such a path ``z`` and ``z + kb`` share
    a color while ``z`` and ``-z + kb`` differ; the two classes fixed by
    negation (0 and b/2) carry paths whose color flips with the sign of ``z``.
    Each path gets a base color; when ``c`` is given, the path holding
    ``c - z`` is colored opposite to the path holding ``z``.
    """
    half = b // 2 if b % 2 == 0 else None

    def path_of(z):
        r = z % b
        return min(r, (-r) % b)

    def offset(z):
        # color of z relative to the base color of its path
        r = z % b
        if r == 0:
            return 1 if z > 0 else 0
        if half is not None and r == half:
            return 0 if z > 0 else 1
        return 0 if r == path_of(z) else 1

    base: dict[int, int] = {}
    for rho in range(b // 2 + 1):
        if rho in base:
            continue
        base[rho] = 0
        if c is None:
            continue
        partner = path_of(c - rho)
        if partner == rho:
            raise NotAvoidable("c-complement of a path is the path itself")
        want = 1 ^ base[rho] ^ offset(rho)
        base[partner] = want ^ offset(c - rho)

    def color(z):
        return base[path_of(z)] ^ offset(z)

    return color


def integers_partition_window(u, n: int) -> dict[int, int]:
    """Explicit avoiding coloring of ``[-n, n]`` for an avoidable set ``u``.

    ``u`` is a finite set of integers or the flag ``ALL_ODD`` (evens get
    color 0, odds color 1).  Requires ``n >= 2 * max|u|``.
    """
    if u == ALL_ODD:
        return {z: z % 2 for z in range(-n, n + 1)}
    u = _as_intset(u)
    if u and n < 2 * max(abs(v) for v in u):
        raise ValueError(f"window radius {n} < 2*max|u| = {2 * max(abs(v) for v in u)}")
    fam = integers_family(u)
    if fam is None:
        raise NotAvoidable(f"{list(u)} is not avoidable in Z")
    if fam.kind == "odd":
        return {z: z % 2 for z in range(-n, n + 1)}
    # translate so the family's even base point is 0: z -> z - a/2
    shift = fam.a // 2
    if fam.kind == "triple":
        color = _path_coloring(2 * fam.step, fam.step)
    else:
        color = _path_coloring(fam.step, None)
    return {z: color(z - shift) for z in range(-n, n + 1)}


def verify_window_partition(u: Iterable[int], coloring: dict[int, int]) -> bool:
    """No two distinct same-colored integers of the window sum into ``u``."""
    u = _as_intset(u)
    keys = sorted(coloring)
    lo, hi = keys[0], keys[-1]
    if keys != list(range(lo, hi + 1)):
        return False
    col = np.array([coloring[z] for z in keys])
    zs = np.arange(lo, hi + 1)
    for t in u:
        partner = t - zs
        ok = (partner >= lo) & (partner <= hi) & (partner != zs)
        if (col[ok] == col[partner[ok] - lo]).any():
            return False
    return True


def integers_window_outcome(u: Iterable[int], radius: int) -> AvoidabilityOutcome:
    """2-color the sum graph of ``u`` restricted to ``[-radius, radius]``.

    A returned odd cycle (as integers) refutes avoidability of ``u`` in Z;
    a coloring is only evidence.
    """
    u = _as_intset(u)
    lo = -radius
    size = 2 * radius + 1
    adj = []
    for i in range(size):
        z = i + lo
        nb = sorted({t - z - lo for t in u if -radius <= t - z <= radius and t - z != z})
        adj.append(nb)
    colors, cycle = two_color(adj)
    if colors is None:
        return AvoidabilityOutcome(False, cycle=tuple(v + lo for v in cycle))
    return AvoidabilityOutcome(True, coloring=tuple(colors))


def refutation_radius(u: Iterable[int]) -> int:
    """Window radius that always contains an odd cycle of an unavoidable set.

    Even-sum triples give a triangle with entries at most ``1.5*max|u|``; the
    remaining case (two evens, one odd, no midpoint) gives a 5-cycle
    ``a/2, b-a/2, c-b+a/2, b-c+a/2, c-a/2`` bounded by ``2.5*max|u|``.
    """
    u = _as_intset(u)
    m = max((abs(v) for v in u), default=0)
    return max(1, (5 * m + 1) // 2)


def verify_int_cycle(u: Sequence[int], cycle: Sequence[int]) -> bool:
    uset = set(u)
    return is_odd_cycle(list(cycle), lambda x, y: x != y and x + y in uset)
