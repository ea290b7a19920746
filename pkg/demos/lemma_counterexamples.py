"""Two small groups where a natural-looking rule about avoidable sets breaks."""

from avoidsets import build_group, decide_avoidable, format_subset, index2_coset_rule_check

# Adding b to an avoidable subset of {0, b} ∪ {x : 2x = b} can break avoidability.
g = build_group("cyclic:6")
u, b = [0, 4], 2
print("Z/6:", format_subset(g, u), "avoidable:", decide_avoidable(g, u).avoidable)
out = decide_avoidable(g, u + [b])
print("Z/6:", format_subset(g, u + [b]), "avoidable:", out.avoidable, "cycle:", out.cycle)
print("   the only root of b in U is 4 = 2 + 2, an even element")

# Index-2 cosets always avoid; whether they saturate is not decided by 2-torsion of H.
for spec in ("cyclic:4", "dihedral:4", "cyclic:6"):
    g = build_group(spec)
    for e in index2_coset_rule_check(g):
        print(f"{spec:<11} coset {format_subset(g, e.coset):<22} saturated={e.saturated!s:<5} "
              f"predicted={e.predicted_saturated!s:<5} {'ok' if e.consistent else 'MISMATCH'}")
