import json

from avoidsets import SearchBudget, build_group, index2_coset_rule_check, verify_family
from avoidsets.verify import verify_instance


def test_family_examples():
    assert verify_family("cyclic", range(3, 13)).all_equal
    assert verify_family("dihedral", range(3, 9)).all_equal
    assert verify_family("quaternion", [1, 2]).all_equal


def test_report_serialization():
    rep = verify_family("cyclic", [5, 6])
    doc = json.loads(rep.to_json())
    assert doc["version"] == 1 and doc["family"] == "cyclic"
    assert [r["spec"] for r in doc["instances"]] == ["cyclic:5", "cyclic:6"]
    assert all(r["verdict"] == "EQUAL" for r in doc["instances"])
    assert "cyclic: 2/2 EQUAL" in rep.to_text()


def test_budget_flagged():
    rep = verify_family("quaternion", [5], SearchBudget(max_order=32))
    assert rep.budget_hit and not rep.all_equal


def test_abelian_max_family():
    rep = verify_family("abelian-max", range(2, 9))
    assert rep.all_equal and len(rep.instances) == 10


def test_diff_is_reported(monkeypatch):
    import avoidsets.verify as verify

    real = verify.catalog_for

    def broken(spec):
        cat = real(spec)
        return type(cat)(cat.spec, cat.entries[1:] + (((0, 1), "bogus"),))

    monkeypatch.setattr(verify, "catalog_for", broken)
    res = verify_instance("cyclic:6")
    assert res.verdict == "DIFFER"
    assert len(res.missing_from_catalog) == 1 and res.missing_from_catalog[0].saturated
    (extra,) = res.extra_in_catalog
    assert extra.members == ("0", "1") and extra.avoidable and not extra.saturated


def test_index2_coset_rule_examples():
    (s3,) = index2_coset_rule_check(build_group("sym:3"))
    assert s3.partition_ok and s3.saturated and s3.consistent
    entries = index2_coset_rule_check(build_group("sum:2,2,2"))
    assert len(entries) == 7
    assert all(e.partition_ok and not e.saturated and e.consistent for e in entries)
    (c6,) = index2_coset_rule_check(build_group("cyclic:6"))
    assert c6.coset == (1, 3, 5) and c6.saturated


def test_index2_saturation_clause_fails_for_z4():
    # every element of {0, 2} has order <= 2, yet the coset {1, 3} is saturated
    (c4,) = index2_coset_rule_check(build_group("cyclic:4"))
    assert c4.partition_ok and c4.saturated and not c4.predicted_saturated
