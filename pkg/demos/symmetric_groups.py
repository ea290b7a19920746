"""Odd permutations avoid themselves; the S6 pair that looks special does not survive in S7."""

from avoidsets import build_group, decide_avoidable, index_two_subgroups, is_saturated, verify_odd_cycle

for n in (3, 4):
    g = build_group(f"sym:{n}")
    ((_, odd),) = index_two_subgroups(g)
    print(f"S{n}: odd coset of size {len(odd)} saturated: {is_saturated(g, odd)}")

for n in (6, 7):
    g = build_group(f"sym:{n}")
    u = [g.parse("(1 2)(3 4)"), g.parse("(5 6)")]
    out = decide_avoidable(g, u)
    if out.avoidable:
        print(f"S{n}: {{(1 2)(3 4), (5 6)}} is avoidable")
    else:
        assert verify_odd_cycle(g, u, out.cycle)
        print(f"S{n}: {{(1 2)(3 4), (5 6)}} is not avoidable, odd cycle:",
              " -> ".join(g.label(x) for x in out.cycle))
