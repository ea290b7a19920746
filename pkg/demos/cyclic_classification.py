"""Saturated sets of Z/nZ: catalog against exhaustive search, with certificates."""

from avoidsets import build_group, cyclic_saturated, decide_avoidable, enumerate_saturated_sets, format_subset

for n in (5, 6, 8, 12):
    g = build_group(f"cyclic:{n}")
    cat = cyclic_saturated(n)
    oracle = enumerate_saturated_sets(g)
    print(f"Z/{n}: {len(oracle)} saturated sets, catalog agrees: {cat.sets == oracle}")
    for u in cat.sets[:4]:
        print(f"   {format_subset(g, u):<14} rule: {cat.rule_of(u)}")

g = build_group("cyclic:5")
out = decide_avoidable(g, [0, 1, 2])
print("\n{0,1,2} in Z/5 is refuted by the odd cycle", out.cycle)
out = decide_avoidable(build_group("cyclic:6"), [0, 1, 2])
A, B = out.parts()
print("{0,1,2} in Z/6 is avoided by", A, "|", B)
