import random

import pytest

from avoidsets import (
    integers_is_avoidable,
    integers_is_saturated,
    integers_partition_window,
    integers_window_outcome,
    verify_window_partition,
)
from avoidsets.avoidance import NotAvoidable
from avoidsets.integers import ALL_ODD, integers_family, refutation_radius, verify_int_cycle


def test_avoidable_examples():
    assert integers_is_avoidable({0, 1, 2})
    assert not integers_is_avoidable({0, 2, 4})
    assert integers_is_avoidable({7, 13, 101})
    out = integers_window_outcome([0, 2, 4], 8)
    assert not out.avoidable and verify_int_cycle([0, 2, 4], out.cycle)


def test_saturated_examples():
    assert integers_is_saturated({0, 1, 2})
    assert integers_is_saturated({0, 4})
    assert not integers_is_saturated({0, 2})
    assert integers_is_saturated({-6, -1, 4})
    assert not integers_is_saturated({1, 3})


def test_small_sets_always_avoidable():
    for a in range(-20, 21):
        for b in range(a + 1, 21):
            assert integers_is_avoidable({a, b})
        assert integers_is_avoidable({a})


@pytest.mark.parametrize("u", [{0, 1, 2}, {0, 4}, {-2, 3, 8}, {6, -14}, {10}])
def test_window_partition(u):
    n = 2 * max(abs(v) for v in u)
    col = integers_partition_window(u, max(n, 8))
    assert verify_window_partition(u, col)


def test_all_odd_flag():
    col = integers_partition_window(ALL_ODD, 10)
    assert all(col[z] == z % 2 for z in col)
    assert verify_window_partition(range(-21, 22, 2), col)


def test_window_errors():
    with pytest.raises(NotAvoidable):
        integers_partition_window({0, 2, 4}, 8)
    with pytest.raises(ValueError):
        integers_partition_window({0, 4}, 7)


def test_family_matches_window_search():
    rng = random.Random(7)
    for _ in range(300):
        u = set(rng.sample(range(-12, 13), rng.randint(1, 4)))
        fam = integers_family(u)
        out = integers_window_outcome(u, refutation_radius(u))
        assert (fam is not None) == out.avoidable, u
        if fam is None:
            assert verify_int_cycle(sorted(u), out.cycle)


def test_refutation_radius_needed_for_five_cycles():
    # two evens and an odd off the midpoint: refuted only past 2*max|u|
    u = [-11, 8, 12]
    assert not integers_window_outcome(u, refutation_radius(u)).avoidable
