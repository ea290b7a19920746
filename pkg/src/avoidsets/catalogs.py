"""Closed-form lists of saturated sets for the classified families.

Each catalog is built from the classification rules alone (no search), except
``pq_saturated`` which fixes the exact members of the ``{x, x^n}`` family with
the avoidability oracle.  Entries are canonical sorted index tuples tagged
with the rule that produced them; a set reachable from two rules keeps the
first tag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .avoidance import decide_avoidable, is_saturated
from .groups import GroupSpec, build_group

__all__ = [
    "SaturatedCatalog",
    "cyclic_saturated",
    "dihedral_saturated",
    "semidihedral_saturated",
    "quaternion_saturated",
    "pq_saturated",
    "catalog_for",
    "v2_mod",
]


@dataclass(frozen=True)
class SaturatedCatalog:
    spec: GroupSpec
    entries: tuple[tuple[tuple[int, ...], str], ...]

    @property
    def sets(self) -> list[tuple[int, ...]]:
        return [s for s, _ in self.entries]

    def rule_of(self, u) -> str | None:
        u = tuple(sorted(u))
        for s, tag in self.entries:
            if s == u:
                return tag
        return None

    def __len__(self):
        return len(self.entries)


class _Collector:
    def __init__(self, spec):
        self.spec = spec
        self.tags: dict[tuple[int, ...], str] = {}

    def add(self, members, tag):
        key = tuple(sorted(set(members)))
        self.tags.setdefault(key, tag)

    def done(self) -> SaturatedCatalog:
        return SaturatedCatalog(self.spec, tuple(sorted(self.tags.items())))


def v2_mod(c: int, n: int) -> int:
    """2-adic valuation of the residue ``c`` mod ``n``, capped at that of ``n``.

    Well defined on residues: ``v2(c + jn) == v2(c)`` whenever ``v2(c) < v2(n)``.
    """
    cap = (n & -n).bit_length() - 1
    c %= n
    if c == 0:
        return cap
    return min((c & -c).bit_length() - 1, cap)


def cyclic_saturated(n: int) -> SaturatedCatalog:
    """Saturated sets of Z/nZ, n >= 3."""
    if n < 3:
        raise ValueError("cyclic catalog needs n >= 3")
    col = _Collector(GroupSpec.cyclic(n))
    if n % 2:
        for pair in combinations(range(n), 2):
            col.add(pair, "cyclic(a): any pair {a,b}")
        return col.done()
    odd_coset = range(1, n, 2)
    if n % 4 == 2:
        for a in range(0, n, 2):
            for x in range(1, n, 2):
                if x != n // 2:
                    col.add({a, (a + x) % n, (a + 2 * x) % n}, "cyclic(b): {a,a+x,a+2x}, a even, x odd, x!=n/2")
        for a in range(n):
            col.add({a, (a + n // 2) % n}, "cyclic(b): {a,a+n/2}")
        col.add(odd_coset, "cyclic(b): odd coset")
    else:
        for a in range(0, n, 2):
            for x in range(1, n, 2):
                col.add({a, (a + x) % n, (a + 2 * x) % n}, "cyclic(c): {a,a+x,a+2x}, a even, x odd")
            for x in range(1, n // 4):
                col.add({a, (a + 4 * x) % n}, "cyclic(c): {a,a+4x}, a even, 4x!=0")
        col.add(odd_coset, "cyclic(c): odd coset")
    return col.done()


def _reflection_unions(col, n_rot, rot, ref, label):
    """The three sets A∪B, A∪C, B∪C (odd rotations, even/odd reflections)."""
    A = [rot(a) for a in range(1, n_rot, 2)]
    B = [ref(a) for a in range(0, n_rot, 2)]
    C = [ref(a) for a in range(1, n_rot, 2)]
    col.add(A + B, f"{label}: A∪B")
    col.add(A + C, f"{label}: A∪C")
    col.add(B + C, f"{label}: B∪C")


def dihedral_saturated(n: int) -> SaturatedCatalog:
    """Saturated sets of the dihedral group of order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral catalog needs n >= 3")
    col = _Collector(GroupSpec.dihedral(n))

    def rot(a):
        return a % n

    def ref(a):
        return n + a % n

    if n % 2:
        col.add([0], "dihedral(a): {e}")
        col.add([ref(a) for a in range(n)], "dihedral(a): all reflections")
        return col.done()
    for k in range(1, n):
        if (n // math.gcd(n, k)) % 2 == 0:
            col.add([0, rot(k)], "dihedral(b): {e,r^k}, n/(n,k) even")
    evens = [c for c in range(2, n, 2) if (n // math.gcd(n, c)) % 2 == 0]
    for c, d in combinations(evens, 2):
        if v2_mod(c, n) == v2_mod(d, n):
            col.add([rot(c), rot(d)], "dihedral(b): {r^2k,r^2l}, equal 2-multiplicity")
    _reflection_unions(col, n, rot, ref, "dihedral(b)")
    return col.done()


def semidihedral_saturated(m: int) -> SaturatedCatalog:
    """Saturated sets of the semi-dihedral group of order 2^m (m >= 4).

    The pair clause ``{x^2n, x^r}`` is read with ``r`` even: both exponents
    nonzero, different from ``2^(m-2)``, with equal 2-adic valuation.  An odd
    ``r`` can never share the valuation of ``2n``, so this is also the literal
    reading.
    """
    if m < 4:
        raise ValueError("semidihedral catalog needs m >= 4")
    N = 2 ** (m - 1)
    half = 2 ** (m - 2)
    col = _Collector(GroupSpec.semidihedral(m))

    def rot(a):
        return a % N

    def ref(a):
        return N + a % N

    col.add([0, rot(half)], "semidihedral: {e,x^(2^(m-2))}")
    evens = [c for c in range(2, N, 2) if c != half]
    for c, d in combinations(evens, 2):
        if v2_mod(c, N) == v2_mod(d, N):
            col.add([rot(c), rot(d)], "semidihedral: {x^2n,x^r}, equal 2-multiplicity")
    _reflection_unions(col, N, rot, ref, "semidihedral")
    return col.done()


def quaternion_saturated(m: int) -> SaturatedCatalog:
    """Saturated sets of the quaternion-type group of order 8m.

    Clause overlaps are merged as sets.  The first clause is applied to every
    exponent ``r`` of ``a`` (not only even ones): ``{a^2m, a^r}`` whenever the
    2-adic valuations of ``r`` and ``2m`` differ, which includes ``r = 0`` and
    every odd ``r``.  The even-only reading misses the pairs with odd ``r``
    that exhaustive search finds for every tested ``m``.
    """
    if m < 1:
        raise ValueError("quaternion catalog needs m >= 1")
    N, z = 4 * m, 2 * m
    col = _Collector(GroupSpec.quaternion(m))

    def pw(x):
        return x % N

    def ba(x):
        return N + x % N

    vz = v2_mod(z, N)
    for r in range(N):
        if r != z and v2_mod(r, N) != vz:
            col.add([pw(z), pw(r)], "quaternion: {a^2m,a^r}, r and 2m differ in 2-multiplicity")
    for r in range(N):
        col.add([pw(z), ba(r)], "quaternion: {a^2m,ba^r}")
    for c in range(2, N, 2):
        if (c // math.gcd(z, c)) % 2 == 0:
            col.add([0, pw(c)], "quaternion: {e,a^2r}, 2r/(2m,2r) even")
    evens = [c for c in range(2, N, 2) if c != z]
    for c, d in combinations(evens, 2):
        if v2_mod(c, N) == v2_mod(d, N) != vz:
            col.add([pw(c), pw(d)], "quaternion: {a^2r,a^2s}, equal 2-multiplicity unlike 2m")
    _reflection_unions(col, N, pw, ba, "quaternion")
    return col.done()


def pq_saturated(p: int, q: int, s: int | None = None) -> SaturatedCatalog:
    """Saturated sets of the non-abelian group of order pq.

    Candidates are the sets ``{x, x^n}`` with ``x^n != x``; the avoidability
    oracle decides which of them are saturated.
    """
    spec = GroupSpec.pq(p, q, s)
    g = build_group(spec)
    col = _Collector(spec)
    tried = set()
    for x in range(g.order):
        y = g.identity
        for _ in range(g.element_order(x)):
            cand = tuple(sorted((x, y)))
            if y != x and cand not in tried:
                tried.add(cand)
                if decide_avoidable(g, cand).avoidable and is_saturated(g, cand):
                    col.add(cand, "pq: {x,x^n}")
            y = g.mul(y, x)
    return col.done()


def catalog_for(spec: GroupSpec | str) -> SaturatedCatalog:
    """Dispatch on the family of ``spec``."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    f, p = spec.family, spec.params
    if f == "cyclic":
        return cyclic_saturated(p[0])
    if f == "dihedral":
        return dihedral_saturated(p[0])
    if f == "semidihedral":
        return semidihedral_saturated(p[0])
    if f == "quaternion":
        return quaternion_saturated(p[0])
    if f == "pq":
        return pq_saturated(*p)
    raise ValueError(f"no catalog for family {f!r}")
