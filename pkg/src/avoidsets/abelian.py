"""Finitely generated abelian groups: maximal avoidable sets and parity forms.

A finite abelian spec ``sum:n1,...,nk`` is split into a *core* (odd cyclic
summands and summands Z/4q) and a number of Z/2 summands.  A modulus
``n = 2*o`` with ``o`` odd contributes Z/o to the core and one Z/2, glued
back together by the Chinese remainder theorem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .avoidance import (
    SearchBudget,
    decide_avoidable,
    enumerate_saturated_sets,
    is_saturated,
    verify_avoiding_partition,
)
from .groups import Group, GroupSpec, build_group, even_elements

__all__ = [
    "AbelianShape",
    "Unsupported",
    "abelian_shape",
    "abelian_max_avoidable",
    "abelian_witness_set",
    "parity_form_sets",
    "ParityForm",
    "conjecture_no_even_check",
    "ConjectureReport",
    "abelian_groups_of_order",
]


class Unsupported(ValueError):
    """The requested construction is not covered for this group."""


@dataclass(frozen=True)
class AbelianShape:
    """Counts of odd cyclic, Z/2, Z/4q and Z summands."""

    m1: int
    m2: int
    m3: int
    r: int = 0

    @property
    def trivial(self) -> bool:
        return self.m1 == self.m2 == self.m3 == self.r == 0


def _moduli(spec: GroupSpec) -> tuple[int, ...]:
    if not spec.is_abelian_family:
        raise ValueError(f"{spec} is not a cyclic or direct-sum spec")
    return spec.moduli


def abelian_shape(spec: GroupSpec, rank: int = 0) -> AbelianShape:
    m1 = m2 = m3 = 0
    for n in _moduli(spec):
        if n == 1:
            continue
        if n % 2:
            m1 += 1
        elif n == 2:
            m2 += 1
        elif n % 4 == 0:
            m3 += 1
        else:
            m1 += 1
            m2 += 1
    return AbelianShape(m1, m2, m3, rank)


def abelian_max_avoidable(shape: AbelianShape) -> int:
    """Maximal size of an avoidable set containing an even element."""
    if shape.trivial:
        raise ValueError("trivial group")
    m1, m2, m3, r = shape.m1, shape.m2, shape.m3, shape.r
    if m1 == m3 == r == 0:
        return 1 + 2 ** (m2 - 1)
    if m2 == m3 == r == 0:
        return 2
    if m3 == r == 0:
        return 2 + 2 ** (m2 - 1)
    return 2 + 2**m2


# -- decomposition into core and Z/2 parts ----------------------------------


@dataclass
class _Split:
    spec: GroupSpec
    core: list[int] = field(default_factory=list)
    core_slot: list[int] = field(default_factory=list)  # spec coordinate of each core summand
    two_slot: list[int] = field(default_factory=list)  # spec coordinate of each Z/2 summand

    def to_spec(self, core_vals, two_vals) -> tuple[int, ...]:
        mods = _moduli(self.spec)
        coords = [0] * len(mods)
        for slot, v in zip(self.core_slot, core_vals):
            coords[slot] = v
        for slot, v in zip(self.two_slot, two_vals):
            n = mods[slot]
            if n == 2:
                coords[slot] = v
            else:
                # CRT: keep the odd residue, set the parity
                o = n // 2
                c = coords[slot] % o
                coords[slot] = c if c % 2 == v else c + o
        return tuple(coords)


def _split(spec: GroupSpec) -> _Split:
    sp = _Split(spec)
    for i, n in enumerate(_moduli(spec)):
        if n == 1:
            continue
        if n == 2:
            sp.two_slot.append(i)
        elif n % 2 or n % 4 == 0:
            sp.core.append(n)
            sp.core_slot.append(i)
        else:
            sp.core.append(n // 2)
            sp.core_slot.append(i)
            sp.two_slot.append(i)
    return sp


def _spec_index(g: Group, split: _Split, core_vals, two_vals) -> int:
    return g.index_of(split.to_spec(core_vals, two_vals))


def _base_partition(moduli, members):
    """Avoiding 2-coloring of a small base group, or raise Unsupported."""
    base = build_group(GroupSpec.direct_sum(*moduli))
    idx = [base.index_of(tuple(m)) for m in members]
    out = decide_avoidable(base, idx)
    if not out.avoidable:
        raise Unsupported(f"base set {members} is not avoidable in sum:{moduli}")
    return base, out.coloring


def abelian_witness_set(spec: GroupSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """An avoidable set of the maximal size, with a verified avoiding coloring.

    Built from the base sets ``{0} ∪ {(1, *)}`` (only Z/2 summands),
    ``{0, x}`` (odd order), ``{0, x, 2x}`` with ``x`` all ones, and the
    doubling step that replaces ``T`` by ``T × Z/2`` for each further Z/2
    summand while lifting the partition unchanged.
    """
    g = build_group(spec)
    shape = abelian_shape(spec)
    if shape.trivial:
        raise Unsupported("trivial group")
    split = _split(spec)
    k, m2 = len(split.core), len(split.two_slot)
    members: list[int] = []
    coloring = [0] * g.order

    if k == 0:
        # only Z/2 summands: {0} plus the coset with first coordinate 1
        for bits in product((0, 1), repeat=m2):
            idx = _spec_index(g, split, (), bits)
            if bits[0] == 1:
                members.append(idx)
                coloring[idx] = 1
        members.append(_spec_index(g, split, (), (0,) * m2))
    else:
        ones = tuple(1 for _ in split.core)
        twos = tuple(2 % n for n in split.core)
        zeros = (0,) * k
        if m2 == 0 and shape.m3 == 0:
            base_mods = list(split.core)
            base_set = [zeros, ones]
            lift_bits = 0
        elif shape.m3 == 0:
            # base group core ⊕ Z/2 with {0, (1..1), (2..2)}
            base_mods = list(split.core) + [2]
            base_set = [zeros + (0,), ones + (1,), twos + (0,)]
            lift_bits = m2 - 1
        else:
            base_mods = list(split.core)
            base_set = [zeros, ones, twos]
            lift_bits = m2
        base, base_color = _base_partition(base_mods, base_set)
        n_base_two = len(base_mods) - k
        # color every element by the base coordinates it projects to
        for core_vals in product(*(range(n) for n in split.core)):
            for bits in product((0, 1), repeat=m2):
                head = tuple(core_vals) + tuple(bits[:n_base_two])
                coloring[_spec_index(g, split, core_vals, bits)] = base_color[base.index_of(head)]
        # the set: base elements with zero lift bits, T elements with any lift bits
        for elt in base_set:
            core_vals, head_bits = elt[:k], elt[k:]
            is_t = elt == base_set[1] and len(base_set) == 3
            lifts = product((0, 1), repeat=lift_bits) if is_t else [(0,) * lift_bits]
            for rest in lifts:
                members.append(_spec_index(g, split, core_vals, tuple(head_bits) + tuple(rest)))
    members = sorted(set(members))
    coloring = tuple(coloring)
    if not verify_avoiding_partition(g, members, coloring):
        raise Unsupported(f"construction for {spec} did not verify")
    return tuple(members), coloring


# -- parity forms and the conjecture probe -----------------------------------


@dataclass(frozen=True)
class ParityForm:
    """Solutions of ``sum a_i x_i = 1 (mod 2)`` over the 2-primary coordinates."""

    vector: tuple[int, ...]
    members: tuple[int, ...]
    coloring: tuple[int, ...]


def parity_form_sets(spec: GroupSpec) -> list[ParityForm]:
    g = build_group(spec)
    mods = _moduli(spec)
    slots = [i for i, n in enumerate(mods) if n % 2 == 0]
    if not slots:
        raise ValueError(f"{spec} has no Z/2^n summand")
    coords = [g.normal_form(i) for i in range(g.order)]
    out = []
    for vec in product((0, 1), repeat=len(slots)):
        if not any(vec):
            continue
        members = tuple(
            i for i, c in enumerate(coords) if sum(a * c[s] for a, s in zip(vec, slots)) % 2 == 1
        )
        mset = set(members)
        coloring = tuple(1 if i in mset else 0 for i in range(g.order))
        out.append(ParityForm(vec, members, coloring))
    return out


@dataclass
class ConjectureReport:
    spec: GroupSpec
    verdict: str
    odd_only_saturated: list[tuple[int, ...]]
    counterexamples: list[tuple[int, ...]]
    forms_not_saturated: list[tuple[int, ...]]

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


def conjecture_no_even_check(spec: GroupSpec, budget: SearchBudget | None = None) -> ConjectureReport:
    """Compare the saturated sets with no even element to the parity forms."""
    g = build_group(spec)
    forms = parity_form_sets(spec)
    form_sets = {f.members for f in forms}
    evens = set(even_elements(g))
    saturated = enumerate_saturated_sets(g, budget)
    odd_only = [u for u in saturated if not evens.intersection(u)]
    counter = [u for u in odd_only if u not in form_sets]
    unsat = sorted(f.members for f in forms if not is_saturated(g, f.members))
    verdict = "PASS" if not counter else "COUNTEREXAMPLE"
    return ConjectureReport(spec, verdict, odd_only, counter, unsat)


def abelian_groups_of_order(n: int) -> list[GroupSpec]:
    """One spec per isomorphism class, by elementary divisors."""
    if n < 2:
        return []
    per_prime = [[[p**k for k in part] for part in _partitions(e)] for p, e in _factor(n)]
    out = []
    for choice in product(*per_prime):
        mods = sorted(m for block in choice for m in block)
        out.append(GroupSpec.cyclic(mods[0]) if len(mods) == 1 else GroupSpec.direct_sum(*mods))
    return sorted(set(out), key=lambda s: (len(s.params), s.params))


def _factor(n: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _partitions(e: int, largest: int | None = None):
    """Integer partitions of ``e`` as non-increasing lists."""
    if e == 0:
        yield []
        return
    for first in range(min(e, largest or e), 0, -1):
        for rest in _partitions(e - first, first):
            yield [first] + rest
