"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (lines are repeated in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import time

import pytest

import property_checks as pc
from avoidsets import (
    GroupSpec,
    SearchBudget,
    abelian_groups_of_order,
    abelian_max_avoidable,
    abelian_shape,
    abelian_witness_set,
    build_group,
    catalog_for,
    conjecture_no_even_check,
    cyclic_saturated,
    decide_avoidable,
    density_report,
    dihedral_saturated,
    eld_bound_check,
    enumerate_saturated_sets,
    index_two_subgroups,
    integers_is_avoidable,
    integers_partition_window,
    is_saturated,
    ld_conjecture_probe,
    max_avoidable_containing_even,
    parse_sequence,
    pq_saturated,
    quaternion_saturated,
    semidihedral_saturated,
    verify_avoiding_partition,
    verify_window_partition,
)
from avoidsets.integers import integers_window_outcome, refutation_radius, verify_int_cycle

RESULTS: list[str] = []


def record(k: int, ok: bool, detail: str, elapsed: float, limit: float) -> bool:
    on_time = elapsed < limit
    line = f"criterion {k:>2}: {'PASS' if ok and on_time else 'FAIL'}  {detail}  [{elapsed:.2f}s / {limit:g}s]"
    RESULTS.append(line)
    print(line)
    return ok and on_time


def _odd_coset(g):
    (pair,) = index_two_subgroups(g)
    return pair[1]


def criterion_1() -> bool:
    t0 = time.perf_counter()
    bad = [n for n in range(3, 25)
           if enumerate_saturated_sets(build_group(f"cyclic:{n}")) != cyclic_saturated(n).sets]
    return record(1, not bad, f"cyclic 3..24 oracle == catalog, mismatches={bad}", time.perf_counter() - t0, 60)


def criterion_2() -> bool:
    t0 = time.perf_counter()
    budget = SearchBudget(max_order=20)
    bad = [n for n in range(3, 11)
           if enumerate_saturated_sets(build_group(f"dihedral:{n}"), budget) != dihedral_saturated(n).sets]
    return record(2, not bad, f"dihedral 3..10 oracle == catalog, mismatches={bad}", time.perf_counter() - t0, 120)


def criterion_3() -> bool:
    t0 = time.perf_counter()
    ok = enumerate_saturated_sets(build_group("semidihedral:4")) == semidihedral_saturated(4).sets
    return record(3, ok, "semidihedral:4 oracle == catalog", time.perf_counter() - t0, 60)


def criterion_4() -> bool:
    t0 = time.perf_counter()
    bad = [m for m in (1, 2)
           if enumerate_saturated_sets(build_group(f"quaternion:{m}")) != quaternion_saturated(m).sets]
    return record(4, not bad, f"quaternion 1,2 oracle == catalog, mismatches={bad}", time.perf_counter() - t0, 60)


def _power_pair(g, u) -> bool:
    if len(u) != 2:
        return False
    x, y = u
    return any(g.power(x, k) == y for k in range(g.element_order(x))) or any(
        g.power(y, k) == x for k in range(g.element_order(y))
    )


def criterion_5() -> bool:
    t0 = time.perf_counter()
    ok, counts = True, {}
    budget = SearchBudget(max_order=39)
    for p, q, s in ((7, 3, 2), (7, 3, 4), (13, 3, 3)):
        g = build_group(f"pq:{p},{q},{s}")
        oracle = enumerate_saturated_sets(g, budget)
        counts[(p, q, s)] = len(oracle)
        ok &= all(_power_pair(g, u) for u in oracle)
        ok &= oracle == pq_saturated(p, q, s).sets
    ok &= counts[(7, 3, 2)] == counts[(7, 3, 4)]
    detail = "pq {x, x^n} form, oracle == catalog, counts " + ", ".join(
        f"{k}={v}" for k, v in counts.items())
    return record(5, ok, detail, time.perf_counter() - t0, 120)


ABELIAN_SUITE = {
    "a": ["sum:2,2", "sum:2,2,2"],
    "b": ["cyclic:3", "cyclic:15", "cyclic:9"],
    "c": ["cyclic:6", "cyclic:10", "cyclic:14", "sum:2,6"],
    "d": ["cyclic:4", "cyclic:8", "sum:2,4", "cyclic:12", "sum:4,4", "sum:2,2,4"],
}


def criterion_6() -> bool:
    t0 = time.perf_counter()
    bad = []
    for case, specs in ABELIAN_SUITE.items():
        for text in specs:
            spec = GroupSpec.parse(text)
            g = build_group(spec)
            expected = abelian_max_avoidable(abelian_shape(spec))
            members, coloring = abelian_witness_set(spec)
            if (max_avoidable_containing_even(g) != expected or len(members) != expected
                    or not verify_avoiding_partition(g, members, coloring)):
                bad.append((case, text))
    n = sum(map(len, ABELIAN_SUITE.values()))
    return record(6, not bad, f"abelian formula == search == witness on {n} groups (cases a-d), failures={bad}",
                  time.perf_counter() - t0, 120)


def criterion_7() -> bool:
    t0 = time.perf_counter()
    s3, s4, s6 = build_group("sym:3"), build_group("sym:4"), build_group("sym:6")
    ok = is_saturated(s3, _odd_coset(s3)) and is_saturated(s4, _odd_coset(s4))
    odd4 = _odd_coset(s4)
    others = [u for u in enumerate_saturated_sets(s4) if u != odd4]
    ok &= bool(others) and all(len(u) == 1 for u in others)
    for u in ([s6.parse("(1 2)(3 4)"), s6.parse("(5 6)")], list(_odd_coset(s6))):
        out = decide_avoidable(s6, u)
        ok &= out.avoidable and verify_avoiding_partition(s6, u, out.coloring)
    detail = (f"S3/S4 odd coset saturated, S4 other saturated sets {len(others)} all size 1, "
              "S6 witnesses verified")
    return record(7, ok, detail, time.perf_counter() - t0, 120)


def _int_family_samples(rng: random.Random, count: int):
    for _ in range(count):
        size = rng.randint(1, 6)
        yield "odd", sorted({2 * rng.randint(-500, 500) + 1 for _ in range(size)})
    for _ in range(count):
        a, x = 2 * rng.randint(-250, 250), 2 * rng.randint(-250, 250) + 1
        yield "triple", [a, a + x, a + 2 * x]
    for _ in range(count):
        a, x = 2 * rng.randint(-250, 250), rng.choice([-1, 1]) * rng.randint(1, 120)
        yield "pair", [a, a + 4 * x]


def criterion_8() -> bool:
    t0 = time.perf_counter()
    rng = random.Random(8)
    bad = []
    for kind, u in _int_family_samples(rng, 200):
        radius = 2 * max(abs(v) for v in u)
        if not integers_is_avoidable(u) or not verify_window_partition(u, integers_partition_window(u, radius)):
            bad.append((kind, u))
    refuted = 0
    while refuted < 200:
        # two evens and an even total force the third element to be even
        u = sorted({2 * rng.randint(-150, 150) for _ in range(3)})
        if len(u) != 3:
            continue
        out = integers_window_outcome(u, refutation_radius(u))
        if out.avoidable or integers_is_avoidable(u) or not verify_int_cycle(u, out.cycle):
            bad.append(("even", u))
        refuted += 1
    return record(8, not bad, f"Z: 600 family sets with verified windows, 200 even-total triples refuted, failures={bad[:3]}",
                  time.perf_counter() - t0, 60)


def criterion_9() -> bool:
    golden = (math.sqrt(5) - 1) / 2
    target_fib = ((1 + math.sqrt(5)) / 2) ** -3
    ok, parts, slowest = True, [], 0.0
    for text, n, target in (("pow:2", 2**30, 0.5), ("fib", 10**15, target_fib)):
        t0 = time.perf_counter()
        eld = density_report(parse_sequence(text), n).eld
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        bound = eld_bound_check(parse_sequence(text), n)
        ok &= abs(eld - target) <= 0.02 and bound.passed and bound.estimate <= golden + 0.01
        parts.append(f"{text} ELD={eld:.5f} (target {target:.6f}, bound {bound.verdict})")
    return record(9, ok, "; ".join(parts), slowest, 1)


def _run_property(name, draw, check, need=1000, cap=200_000):
    """Draw instances until ``need`` of them meet the hypotheses."""
    checked = failures = 0
    first = None
    for _ in range(cap):
        args = draw()
        res = check(*args)
        if res is None:
            continue
        checked += 1
        if not res:
            failures += 1
            first = first or args
        if checked >= need:
            break
    return name, checked, failures, first


def criterion_10() -> bool:
    t0 = time.perf_counter()
    rng = random.Random(10)

    def elems(k=5):
        return [rng.randint(0, 10**6) for _ in range(rng.randint(0, k))]

    def even_sum_triple():
        c = rng.randint(3, 400)
        b = rng.randint(c // 2 + 1, c - 1)
        a = rng.randint(c - b + 1, b - 1) if c - b + 1 <= b - 1 else 0
        return a, b, c

    def union_b_draw():
        spec = rng.choice(pc.ABELIAN_POOL)
        return spec, rng.randint(0, 10**6), 1 | rng.randint(0, 2**16 - 1)

    runs = [
        _run_property("certificate soundness", lambda: (rng.choice(pc.GROUP_POOL), elems()), pc.check_certificate),
        _run_property("downward closure", lambda: (rng.choice(pc.GROUP_POOL), elems(), rng.randint(0, 31)),
                      pc.check_downward),
        _run_property("shift invariance", lambda: (rng.choice(pc.ABELIAN_POOL), elems(), rng.randint(0, 10**6)),
                      pc.check_shift),
        _run_property("4-element lemma",
                      lambda: (rng.choice([4, 6, 8, 10, 12, 14, 16, 20, 24, 30]), [rng.randint(0, 10**6) for _ in range(4)]),
                      pc.check_four_element),
        _run_property("5-cycle lemma", lambda: (rng.choice(pc.ABELIAN_POOL), rng.randint(0, 10**6), rng.randint(0, 10**6)),
                      pc.check_five_cycle),
        _run_property("U+{b} lemma (stated hypotheses)", union_b_draw,
                      lambda s, b, p: pc.check_union_b(s, b, p, repaired=False)),
        _run_property("U+{b} lemma (with an odd root of b in U)", union_b_draw, pc.check_union_b),
        _run_property("even-sum observation", even_sum_triple, pc.check_even_sum),
    ]
    for name, checked, failures, first in runs:
        print(f"    {name}: {checked} instances, {failures} failures" + (f", first {first}" if first else ""))
    ok = all(checked >= 1000 and not failures for _, checked, failures, _ in runs)
    summary = ", ".join(f"{name} {checked - failures}/{checked}" for name, checked, failures, _ in runs)
    return record(10, ok, summary, time.perf_counter() - t0, 120)


SURVIVING_SEQUENCES = ("fib", "pow:2", "pow:3", "rec:1,1/2,3")


def criterion_11() -> bool:
    t0 = time.perf_counter()
    groups = [s for n in range(2, 17) for s in abelian_groups_of_order(n) if any(m % 2 == 0 for m in s.params)]
    reports = [conjecture_no_even_check(s) for s in groups]
    failed = [str(r.spec) for r in reports if not r.passed]
    probes = []
    for text in SURVIVING_SEQUENCES:
        probes.append(ld_conjecture_probe(parse_sequence(text), 10**15))
    ld_ok = all(p.verdict == "PASS" for p in probes)
    detail = (f"no-even conjecture PASS on {len(groups) - len(failed)}/{len(groups)} groups; LD trailing max "
              + ", ".join(f"{p.sequence}={p.estimate:.4f}" if p.estimate is not None else f"{p.sequence}={p.verdict}"
                          for p in probes) + " (limit 0.628)")
    return record(11, not failed and ld_ok, detail, time.perf_counter() - t0, 120)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]

U_B_REASON = ("the U+{b} lemma fails under its stated hypotheses "
              "(Z/6, b=2, U={0,4}); it holds once U contains an odd root of b")


@pytest.mark.parametrize(
    "criterion",
    [pytest.param(c, marks=pytest.mark.xfail(strict=True, reason=U_B_REASON)) if c is criterion_10 else c
     for c in CRITERIA],
    ids=[c.__name__ for c in CRITERIA],
)
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
