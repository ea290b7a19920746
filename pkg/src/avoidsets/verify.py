"""Cross-checks of the closed-form catalogs against exhaustive search.

``verify_family`` runs one family over a parameter range and returns a
``ComparisonReport``; its JSON form has one record per instance with the
spec string, a verdict (``EQUAL``, ``DIFFER`` or ``BUDGET``) and, for
differences, the offending sets as element labels together with their
avoidability diagnosis.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .abelian import (
    Unsupported,
    abelian_groups_of_order,
    abelian_max_avoidable,
    abelian_shape,
    abelian_witness_set,
)
from .avoidance import (
    BudgetExceeded,
    SearchBudget,
    decide_avoidable,
    enumerate_saturated_sets,
    is_saturated,
    max_avoidable_containing_even,
    verify_avoiding_partition,
)
from .catalogs import catalog_for
from .groups import Group, GroupSpec, build_group, format_element, index_two_subgroups

__all__ = [
    "REPORT_VERSION",
    "SetDiagnosis",
    "InstanceResult",
    "ComparisonReport",
    "verify_instance",
    "verify_abelian_max",
    "verify_family",
    "family_specs",
    "CosetRuleEntry",
    "index2_coset_rule_check",
]

REPORT_VERSION = 1
CATALOG_FAMILIES = ("cyclic", "dihedral", "semidihedral", "quaternion", "pq")
FAMILIES = CATALOG_FAMILIES + ("abelian-max",)


@dataclass(frozen=True)
class SetDiagnosis:
    members: tuple[str, ...]
    avoidable: bool
    saturated: bool


@dataclass
class InstanceResult:
    spec: str
    verdict: str
    oracle_count: int | None = None
    catalog_count: int | None = None
    missing_from_catalog: list[SetDiagnosis] = field(default_factory=list)
    extra_in_catalog: list[SetDiagnosis] = field(default_factory=list)
    detail: str = ""

    @property
    def equal(self) -> bool:
        return self.verdict == "EQUAL"


@dataclass
class ComparisonReport:
    family: str
    instances: list[InstanceResult]

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.instances)

    @property
    def budget_hit(self) -> bool:
        return any(r.verdict == "BUDGET" for r in self.instances)

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "family": self.family,
            "all_equal": self.all_equal,
            "instances": [asdict(r) for r in self.instances],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = []
        for r in self.instances:
            counts = ""
            if r.oracle_count is not None:
                counts = f"  oracle={r.oracle_count} catalog={r.catalog_count}"
            extra = f"  {r.detail}" if r.detail else ""
            lines.append(f"{r.spec:<22} {r.verdict}{counts}{extra}")
            for tag, diffs in (("missing", r.missing_from_catalog), ("extra", r.extra_in_catalog)):
                for dg in diffs:
                    lines.append(
                        f"    {tag}: {{{', '.join(dg.members)}}}"
                        f" avoidable={dg.avoidable} saturated={dg.saturated}"
                    )
        n_eq = sum(r.equal for r in self.instances)
        lines.append(f"{self.family}: {n_eq}/{len(self.instances)} EQUAL")
        return "\n".join(lines)


def _diagnose(g: Group, u: Sequence[int]) -> SetDiagnosis:
    avoidable = decide_avoidable(g, u).avoidable
    return SetDiagnosis(
        tuple(format_element(g, x) for x in u),
        avoidable,
        avoidable and is_saturated(g, u),
    )


def verify_instance(spec: GroupSpec | str, budget: SearchBudget | None = None) -> InstanceResult:
    """Compare the catalog of one group with the exhaustive enumeration."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    g = build_group(spec)
    try:
        oracle = enumerate_saturated_sets(g, budget)
    except BudgetExceeded as exc:
        return InstanceResult(str(spec), "BUDGET", detail=str(exc))
    catalog = catalog_for(spec).sets
    o, c = set(oracle), set(catalog)
    missing = [_diagnose(g, u) for u in sorted(o - c)]
    extra = [_diagnose(g, u) for u in sorted(c - o)]
    verdict = "EQUAL" if not missing and not extra else "DIFFER"
    return InstanceResult(str(spec), verdict, len(oracle), len(catalog), missing, extra)


def verify_abelian_max(spec: GroupSpec | str, budget: SearchBudget | None = None) -> InstanceResult:
    """Formula vs. branch-and-bound search vs. constructed witness size."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    g = build_group(spec)
    predicted = abelian_max_avoidable(abelian_shape(spec))
    try:
        searched = max_avoidable_containing_even(g, budget)
    except BudgetExceeded as exc:
        return InstanceResult(str(spec), "BUDGET", detail=str(exc))
    try:
        members, coloring = abelian_witness_set(spec)
        witness = len(members) if verify_avoiding_partition(g, members, coloring) else -1
    except Unsupported:
        witness = None
    ok = predicted == searched and witness in (None, predicted)
    detail = f"formula={predicted} search={searched} witness={witness}"
    return InstanceResult(str(spec), "EQUAL" if ok else "DIFFER", detail=detail)


def family_specs(family: str, params: Iterable) -> list[GroupSpec]:
    """Specs for a family: ints for one-parameter families, (p, q, s) for pq, orders for abelian-max."""
    if family == "cyclic":
        return [GroupSpec.cyclic(n) for n in params]
    if family == "dihedral":
        return [GroupSpec.dihedral(n) for n in params]
    if family == "semidihedral":
        return [GroupSpec.semidihedral(m) for m in params]
    if family == "quaternion":
        return [GroupSpec.quaternion(m) for m in params]
    if family == "pq":
        return [GroupSpec.pq(*t) for t in params]
    if family == "abelian-max":
        return [sp for n in params for sp in abelian_groups_of_order(n)]
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def verify_family(family: str, params: Iterable, budget: SearchBudget | None = None) -> ComparisonReport:
    """Run every instance of a family; instances are reported in parameter order."""
    specs = family_specs(family, params)
    check = verify_abelian_max if family == "abelian-max" else verify_instance
    return ComparisonReport(family, [check(sp, budget) for sp in specs])


# -- index-2 cosets -----------------------------------------------------------------


@dataclass(frozen=True)
class CosetRuleEntry:
    """One index-2 subgroup ``H`` and what holds for its coset ``G - H``.

    ``predicted_saturated`` is "not every element of H squares to the
    identity"; ``consistent`` records whether the search agrees.
    """

    subgroup: tuple[int, ...]
    coset: tuple[int, ...]
    partition_ok: bool
    saturated: bool
    predicted_saturated: bool

    @property
    def consistent(self) -> bool:
        return self.partition_ok and self.saturated == self.predicted_saturated


def index2_coset_rule_check(g: Group) -> list[CosetRuleEntry]:
    """Check each index-2 coset: avoided by ``{H, G - H}``, and saturated as predicted."""
    out = []
    for sub, coset in index_two_subgroups(g):
        in_coset = set(coset)
        coloring = [1 if x in in_coset else 0 for x in range(g.order)]
        ok = verify_avoiding_partition(g, coset, coloring)
        predicted = any(g.mul(h, h) != g.identity for h in sub)
        out.append(CosetRuleEntry(sub, coset, ok, ok and is_saturated(g, coset), predicted))
    return out
