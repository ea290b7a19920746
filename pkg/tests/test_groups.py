import numpy as np
import pytest

from avoidsets import (
    GroupSpec,
    build_group,
    format_element,
    group_op,
    index_two_subgroups,
    is_even_element,
    parse_element,
    square_roots,
)
from avoidsets.groups import ElementParseError, GroupError, parse_subset, split_labels

SMALL_SPECS = [
    "cyclic:1", "cyclic:7", "cyclic:12", "sum:2,2", "sum:2,4", "sum:3,6",
    "dihedral:3", "dihedral:4", "dihedral:7", "semidihedral:4", "semidihedral:5",
    "quaternion:1", "quaternion:3", "pq:7,3,2", "pq:7,3,4", "pq:13,3,3", "sym:3", "sym:4",
]


def test_spec_parse_and_str():
    assert str(GroupSpec.parse("cyclic:12")) == "cyclic:12"
    assert str(GroupSpec.parse("D:6")) == "dihedral:6"
    assert GroupSpec.parse("pq:7,3") == GroupSpec.pq(7, 3, 2)
    assert GroupSpec.parse("sym:4").order == 24


@pytest.mark.parametrize(
    "text",
    ["dihedral:2", "semidihedral:3", "sym:8", "pq:7,3,1", "pq:11,3,2", "sum:1,2", "bogus:3", "cyclic", "cyclic:x"],
)
def test_spec_rejects_invalid(text):
    with pytest.raises(GroupError):
        GroupSpec.parse(text)


@pytest.mark.parametrize("text", SMALL_SPECS)
def test_axioms_and_round_trip(text):
    g = build_group(text)
    assert g.order == GroupSpec.parse(text).order
    g.validate()
    for a in range(g.order):
        assert parse_element(g, format_element(g, a)) == a
        assert g.mul(a, g.inv(a)) == 0


def test_orders_of_families():
    assert build_group("dihedral:3").order == 6
    assert build_group("semidihedral:4").order == 16
    assert build_group("quaternion:2").order == 16
    assert build_group("pq:13,3,3").order == 39


def test_quaternion_law():
    g = build_group("quaternion:1")
    a, b = g.parse("a^1"), g.parse("b*a^0")
    assert g.element_order(a) == 4
    assert g.mul(b, b) == g.parse("a^2")
    # classical Q8: every element outside the centre has order 4
    assert sorted(g.element_order(x) for x in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    for m in (1, 2, 3):
        g = build_group(GroupSpec.quaternion(m))
        b = g.parse("b*a^0")
        assert g.mul(b, b) == g.parse(f"a^{2 * m}")
        assert g.power(b, 4) == 0
        assert g.mul(b, g.parse("a^1")) == g.mul(g.parse(f"a^{4 * m - 1}"), b)
        for x in range(4 * m):
            for y in range(4 * m):
                got = g.mul(g.parse(f"b*a^{x}"), g.parse(f"b*a^{y}"))
                assert got == g.parse(f"a^{(2 * m + y - x) % (4 * m)}")


def test_dihedral_law_and_involutions():
    g = build_group("dihedral:4")
    assert group_op(g, g.parse("f*r^1"), g.parse("f*r^3")) == g.parse("r^2")
    for n in range(3, 11):
        g = build_group(GroupSpec.dihedral(n))
        inv = sum(1 for x in range(g.order) if g.mul(x, x) == 0)
        # n reflections, the identity, and r^(n/2) when n is even
        assert inv == (n + 1 if n % 2 else n + 2)


def test_semidihedral_relation():
    for m in (4, 5):
        g = build_group(GroupSpec.semidihedral(m))
        x, y = g.parse("x^1"), g.parse("y*x^0")
        k = -1 + 2 ** (m - 2)
        assert g.mul(y, x) == g.mul(g.power(x, k), y)
        assert g.element_order(x) == 2 ** (m - 1)
        assert g.mul(y, y) == 0


def test_pq_group():
    for spec in ("pq:7,3,2", "pq:7,3,4", "pq:13,3,3"):
        g = build_group(spec)
        p, q, s = g.spec.params
        a, b = g.parse("a^1*b^0"), g.parse("a^0*b^1")
        assert g.element_order(a) == q and g.element_order(b) == p
        assert not g.is_abelian
        assert g.mul(b, a) == g.mul(a, g.power(b, s))


def test_symmetric_labels_and_composition():
    g = build_group("sym:4")
    dt = parse_element(g, "(1 2)(3 4)")
    assert format_element(g, dt) == "(1 2)(3 4)"
    assert format_element(g, 0) == "id"
    # (p*q)(i) = p(q(i)): (1 2)(2 3) = (1 2 3)
    assert g.mul(g.parse("(1 2)"), g.parse("(2 3)")) == g.parse("(1 2 3)")


def test_large_symmetric_is_lazy():
    g = build_group("sym:7")
    assert g.table is None and g.order == 5040
    t = g.parse("(1 2)")
    assert g.mul(t, t) == 0


def test_group_op_examples():
    assert group_op(build_group("cyclic:5"), 3, 4) == 2
    g = build_group("dihedral:5")
    for x in range(g.order):
        assert group_op(g, 0, x) == x
    assert group_op(build_group("cyclic:1"), 0, 0) == 0


def test_square_roots_and_parity():
    assert square_roots(build_group("cyclic:8"), 4) == {2, 6}
    assert square_roots(build_group("cyclic:6"), 3) == set()
    assert square_roots(build_group("sum:2,2"), 0) == {0, 1, 2, 3}
    c12 = build_group("cyclic:12")
    assert is_even_element(c12, 2) and not is_even_element(c12, 3)
    assert is_even_element(build_group("cyclic:7"), 3)


def test_index_two_subgroups():
    g = build_group("cyclic:6")
    assert index_two_subgroups(g) == [((0, 2, 4), (1, 3, 5))]
    assert index_two_subgroups(build_group("cyclic:5")) == []
    s3 = build_group("sym:3")
    ((sub, coset),) = index_two_subgroups(s3)
    assert sorted(format_element(s3, x) for x in coset) == ["(1 2)", "(1 3)", "(2 3)"]
    assert len(index_two_subgroups(build_group("sum:2,2,2"))) == 7
    # each result really is a subgroup of half the order
    for spec in ("dihedral:4", "quaternion:2", "sym:4"):
        g = build_group(spec)
        for sub, coset in index_two_subgroups(g):
            assert len(sub) * 2 == g.order
            assert all(g.mul(a, b) in set(sub) for a in sub for b in sub)
            assert set(sub) | set(coset) == set(range(g.order))


def test_element_parsing():
    assert parse_element(build_group("dihedral:5"), "f*r^2") == 7
    assert parse_element(build_group("cyclic:9"), "7") == 7
    assert split_labels("(1 2)(3 4),(5 6)") == ["(1 2)(3 4)", "(5 6)"]
    g = build_group("sum:2,4")
    assert parse_subset(g, "(1,0),(0,3)") == (3, 4)
    with pytest.raises(ElementParseError):
        parse_element(build_group("cyclic:5"), "x")
    with pytest.raises(ElementParseError):
        parse_element(build_group("cyclic:5"), "7")


def test_table_is_readonly():
    g = build_group("cyclic:6")
    assert isinstance(g.table, np.ndarray)
    with pytest.raises(ValueError):
        g.table[0, 0] = 1
