"""Growth measures of avoidable integer sequences and the even-sum obstruction."""

from avoidsets import density_report, eld_bound_check, ld_conjecture_probe, parse_sequence

rows = [("pow:2", 2**30), ("fib", 10**15), ("pow:3", 10**15), ("binom2", 10**8)]
print(f"{'sequence':<9}{'n':>8}  {'ELD':>8}  {'LD':>8}  {'LD max':>8}")
for text, n in rows:
    rep = density_report(parse_sequence(text), n)
    fmt = lambda v: "   -    " if v is None else f"{v:8.5f}"
    print(f"{text:<9}{n:>8.0e}  {fmt(rep.eld)}  {fmt(rep.ld)}  {fmt(rep.ld_trailing_max)}")

print()
for text in ("fib", "pow:2", "binom2"):
    seq = parse_sequence(text)
    eld, ld = eld_bound_check(seq, 10**15), ld_conjecture_probe(seq, 10**15)
    line = f"{text:<7} ELD bound {eld.verdict:<9} LD probe {ld.verdict}"
    if eld.obstruction is not None:
        line += f"  (even-sum triple {eld.obstruction.triple}, odd cycle {eld.refutation})"
    print(line)
