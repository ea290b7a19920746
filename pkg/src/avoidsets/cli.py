"""Command-line front end.

Exit codes: 0 avoidable / equal / pass, 1 unavoidable / differ / fail,
2 usage error, 3 search budget exceeded.  Every witness coloring and odd
cycle is re-verified before it is printed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from decimal import Decimal, InvalidOperation

from .abelian import conjecture_no_even_check
from .avoidance import (
    BudgetExceeded,
    SearchBudget,
    decide_avoidable,
    enumerate_saturated_sets,
    verify_avoiding_partition,
    verify_odd_cycle,
)
from .catalogs import catalog_for
from .density import (
    SequenceError,
    block_density_check,
    density_report,
    eld_bound_check,
    evensum_obstruction,
    fibonacci_growth_check,
    ld_conjecture_probe,
    parse_sequence,
)
from .groups import ElementParseError, GroupError, GroupSpec, build_group, format_element, parse_subset
from .integers import (
    ALL_ODD,
    integers_family,
    integers_partition_window,
    integers_window_outcome,
    refutation_radius,
    verify_int_cycle,
    verify_window_partition,
)
from .verify import FAMILIES, verify_family

OUTPUT_VERSION = 1
EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SET_HELP = (
    "comma-separated element labels, e.g. '0,1', 'r^1,f*r^2', '(0,1),(1,1)' or "
    "'(1 2)(3 4),(5 6)'; quote labels that contain spaces"
)


class UsageError(Exception):
    pass


class _Out:
    """Collects one document and prints it as text or versioned JSON."""

    def __init__(self, fmt: str, command: str):
        self.fmt = fmt
        self.doc = {"version": OUTPUT_VERSION, "command": command}
        self.lines: list[str] = []

    def set(self, **kw):
        self.doc.update(kw)

    def say(self, line: str = ""):
        self.lines.append(line)

    def emit(self):
        if self.fmt == "structured":
            print(json.dumps(self.doc, indent=2, default=str))
        else:
            print("\n".join(self.lines))


def _parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return [int(lo)]
        a, b = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected a..b") from exc
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _parse_big_int(text: str) -> int:
    """Integers written as ``1000``, ``1e15`` or ``2**30``."""
    text = text.strip()
    try:
        if "**" in text:
            base, exp = text.split("**")
            return int(base) ** int(exp)
        value = Decimal(text)
    except (InvalidOperation, ValueError) as exc:
        raise UsageError(f"bad integer {text!r}") from exc
    if value != value.to_integral_value():
        raise UsageError(f"{text!r} is not an integer")
    return int(value)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_order=args.budget_order, max_nodes=args.budget_nodes)


def _group(text: str):
    return build_group(GroupSpec.parse(text))


def _labels(g, u):
    return [format_element(g, x) for x in u]


# -- subcommands --------------------------------------------------------------------


def cmd_check(args, out: _Out) -> int:
    g = _group(args.group)
    u = parse_subset(g, args.set)
    res = decide_avoidable(g, u)
    out.set(group=str(g.spec), set=_labels(g, u), avoidable=res.avoidable)
    out.say(f"group {g.spec}, set {{{', '.join(_labels(g, u))}}}")
    if res.avoidable:
        if not verify_avoiding_partition(g, u, res.coloring):
            raise RuntimeError("internal error: witness failed verification")
        a, b = res.parts()
        out.set(witness={"A": _labels(g, a), "B": _labels(g, b)})
        out.say("avoidable")
        out.say(f"  A: {{{', '.join(_labels(g, a))}}}")
        out.say(f"  B: {{{', '.join(_labels(g, b))}}}")
        return EXIT_OK
    if not verify_odd_cycle(g, u, res.cycle):
        raise RuntimeError("internal error: odd cycle failed verification")
    out.set(odd_cycle=_labels(g, res.cycle))
    out.say("not avoidable")
    out.say(f"  odd cycle: {' - '.join(_labels(g, res.cycle))}")
    return EXIT_NO


def cmd_saturated(args, out: _Out) -> int:
    g = _group(args.group)
    out.set(group=str(g.spec), source=args.source)
    oracle = catalog = None
    if args.source in ("oracle", "both"):
        oracle = enumerate_saturated_sets(g, _budget(args))
    if args.source in ("catalog", "both"):
        catalog = catalog_for(g.spec)

    def show(title, sets, tags=None):
        out.say(f"{title}: {len(sets)} saturated sets")
        for u in sets:
            tag = f"  [{tags(u)}]" if tags else ""
            out.say(f"  {{{', '.join(_labels(g, u))}}}{tag}")

    if oracle is not None:
        out.set(oracle=[_labels(g, u) for u in oracle])
        if args.source == "oracle":
            show("oracle", oracle)
    if catalog is not None:
        out.set(catalog=[{"set": _labels(g, u), "rule": t} for u, t in catalog.entries])
        if args.source == "catalog":
            show("catalog", catalog.sets, catalog.rule_of)
    if args.source != "both":
        return EXIT_OK
    o, c = set(oracle), set(catalog.sets)
    missing, extra = sorted(o - c), sorted(c - o)
    out.set(
        missing_from_catalog=[_labels(g, u) for u in missing],
        extra_in_catalog=[_labels(g, u) for u in extra],
        equal=not missing and not extra,
    )
    show("oracle and catalog", sorted(o & c), catalog.rule_of)
    for u in missing:
        out.say(f"  missing from catalog: {{{', '.join(_labels(g, u))}}}")
    for u in extra:
        out.say(f"  extra in catalog: {{{', '.join(_labels(g, u))}}}")
    out.say("diff: empty" if not missing and not extra else f"diff: {len(missing)} missing, {len(extra)} extra")
    return EXIT_OK if not missing and not extra else EXIT_NO


def _pq_instances(text: str) -> list[tuple[int, ...]]:
    inst = []
    for chunk in text.split(";"):
        try:
            inst.append(tuple(int(v) for v in chunk.split(",")))
        except ValueError as exc:
            raise UsageError(f"bad pq instance {chunk!r}; expected p,q,s") from exc
    return inst


def cmd_verify(args, out: _Out) -> int:
    fam = args.family
    if fam == "pq":
        if not args.instances:
            raise UsageError("verify --family pq needs --instances 'p,q,s;p,q,s'")
        params = _pq_instances(args.instances)
    else:
        text = args.orders if fam == "abelian-max" and args.orders else args.range
        if not text:
            raise UsageError(f"verify --family {fam} needs --range a..b" + (" or --orders a..b" if fam == "abelian-max" else ""))
        params = _parse_range(text)
    rep = verify_family(fam, params, _budget(args))
    out.set(report=rep.to_dict())
    out.say(rep.to_text())
    if rep.budget_hit:
        return EXIT_BUDGET
    return EXIT_OK if rep.all_equal else EXIT_NO


def _fmt(v):
    return "undefined" if v is None else f"{v:.6f}"


def cmd_density(args, out: _Out) -> int:
    seq = parse_sequence(args.seq)
    out.set(sequence=str(seq))
    code = EXIT_OK
    if args.check == "evensum":
        vals = seq.params if seq.is_finite else tuple(seq.upto(args.n or 10**6))
        ob = evensum_obstruction(vals)
        out.set(evensum=None if ob is None else {"triple": ob.triple, "witness": ob.witness})
        if ob is None:
            out.say(f"{seq}: no even-sum triple")
            return EXIT_OK
        out.say(f"{seq}: even-sum obstruction {ob.triple}, unpartitionable {set(ob.witness)}")
        return EXIT_NO
    if args.check == "block":
        if args.even is None:
            raise UsageError("--check block needs --even N")
        rep = block_density_check(seq, args.even, args.blocks)
        out.set(block=asdict(rep), passed=rep.passed)
        if rep.obstruction is not None:
            out.say(f"precondition fails: even-sum triple {rep.obstruction.triple}")
        if rep.violation is not None:
            k, members = rep.violation
            out.say(f"block {k} holds {members}; implied even-sum triple {rep.triple}")
        else:
            out.say(f"all {args.blocks} blocks of length {args.even} hold at most 2 elements")
        return EXIT_OK if rep.passed else EXIT_NO
    if args.check == "growth":
        rep = fibonacci_growth_check(seq, args.count)
        out.set(growth=asdict(rep), passed=rep.passed)
        out.say(f"x={rep.x} y={rep.y}: " + ("all growth checks pass" if rep.passed else f"fails at k={rep.failure[0]}: {rep.failure[1]}"))
        return EXIT_OK if rep.passed else EXIT_NO

    n = args.n or 10**6
    if args.check in ("eld-bound", "ld-probe"):
        fn = eld_bound_check if args.check == "eld-bound" else ld_conjecture_probe
        rep = fn(seq, n)
        out.set(bound={k: v for k, v in asdict(rep).items()}, verdict=rep.verdict)
        if rep.refutation is not None:
            line = f"{rep.measure} check DECLINED: prefix refuted by odd cycle {rep.refutation}"
            if rep.obstruction:
                line += f", even-sum triple {rep.obstruction.triple}"
        else:
            line = f"{rep.measure} {_fmt(rep.estimate)} vs {rep.limit:.6f}: {rep.verdict}"
        out.say(f"{seq}: {line}")
        return EXIT_OK if rep.verdict in ("PASS", "UNDEFINED") else EXIT_NO

    rep = density_report(seq, n)
    out.set(report=rep.as_dict())
    out.say(f"{seq} at n={n}: U(n)={rep.count} U2(n)={rep.even_count}")
    measures = ("d", "eld", "ld") if args.measure == "all" else (args.measure,)
    for m in measures:
        point, trail = getattr(rep, m), getattr(rep, f"{m}_trailing_max")
        out.say(f"  {m:<3} = {_fmt(point)}   (max over [n/10, n]: {_fmt(trail)})")
    return code


def cmd_partition(args, out: _Out) -> int:
    text = args.set.strip()
    if text.lower() in (ALL_ODD, "odd"):
        u = ALL_ODD
    else:
        try:
            u = tuple(sorted({int(v) for v in text.split(",") if v.strip()}))
        except ValueError as exc:
            raise UsageError(f"bad integer set {text!r}") from exc
        if not u:
            raise UsageError("empty set")
    if u != ALL_ODD and integers_family(u) is None:
        radius = refutation_radius(u)
        res = integers_window_outcome(u, radius)
        out.set(set=list(u), avoidable=False, radius=radius)
        out.say(f"{{{', '.join(map(str, u))}}} is not avoidable in Z")
        if res.cycle is not None and verify_int_cycle(u, res.cycle):
            out.set(odd_cycle=list(res.cycle))
            out.say(f"  odd cycle in [-{radius}, {radius}]: {' - '.join(map(str, res.cycle))}")
        return EXIT_NO
    need = 0 if u == ALL_ODD else 2 * max(abs(v) for v in u)
    window = args.window if args.window is not None else max(need, 8)
    if window < need:
        raise UsageError(f"--window must be at least 2*max|u| = {need}")
    coloring = integers_partition_window(u, window)
    check_set = [v for v in range(-2 * window, 2 * window + 1) if v % 2] if u == ALL_ODD else u
    if not verify_window_partition(check_set, coloring):
        raise RuntimeError("internal error: window coloring failed verification")
    a = [z for z, c in sorted(coloring.items()) if c == 0]
    b = [z for z, c in sorted(coloring.items()) if c == 1]
    out.set(set=u if u == ALL_ODD else list(u), avoidable=True, window=window, witness={"A": a, "B": b})
    out.say(f"{'all odd integers' if u == ALL_ODD else set(u)} is avoidable; coloring of [-{window}, {window}]:")
    out.say(f"  A: {a}")
    out.say(f"  B: {b}")
    return EXIT_OK


def cmd_conjecture(args, out: _Out) -> int:
    spec = GroupSpec.parse(args.group)
    g = build_group(spec)
    rep = conjecture_no_even_check(spec, _budget(args))
    out.set(
        group=str(spec),
        verdict=rep.verdict,
        odd_only_saturated=[_labels(g, u) for u in rep.odd_only_saturated],
        counterexamples=[_labels(g, u) for u in rep.counterexamples],
        parity_forms_not_saturated=[_labels(g, u) for u in rep.forms_not_saturated],
    )
    out.say(f"{spec}: {rep.verdict}")
    for u in rep.odd_only_saturated:
        out.say(f"  saturated, no even element: {{{', '.join(_labels(g, u))}}}")
    for u in rep.counterexamples:
        out.say(f"  not a parity form: {{{', '.join(_labels(g, u))}}}")
    return EXIT_OK if rep.passed else EXIT_NO


# -- parser -------------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "structured"), default=d("text"), help="output format (structured = versioned JSON)")
    p.add_argument("--budget-order", type=int, default=d(32), metavar="N", help="largest group order for exhaustive searches (default 32)")
    p.add_argument("--budget-nodes", type=int, default=d(2_000_000), metavar="N", help="search-node limit (default 2000000)")
    p.add_argument("--seed-free", action="store_true", default=d(False), help="reserved; nothing here is random, so it is rejected")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avoidsets",
        description="Avoidable and saturated sets in finite groups, Z and N.",
        epilog="Exit codes: 0 avoidable/equal/pass, 1 unavoidable/differ/fail, 2 usage, 3 budget.",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, helptext):
        p = sub.add_parser(name, help=helptext, description=helptext)
        _global_flags(p, suppress=True)
        return p

    p = add("check", "decide avoidability of a set and print a witness or an odd cycle")
    p.add_argument("--group", required=True, help="group spec, e.g. cyclic:5, dihedral:6, pq:7,3,2, sym:4")
    p.add_argument("--set", required=True, help=SET_HELP)

    p = add("saturated", "list saturated sets by search, by catalog, or both with a diff")
    p.add_argument("--group", required=True)
    p.add_argument("--source", choices=("oracle", "catalog", "both"), default="oracle")

    p = add("verify", "compare catalogs with exhaustive search over a family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--range", help="parameter range a..b")
    p.add_argument("--orders", help="group orders a..b (abelian-max)")
    p.add_argument("--instances", help="pq instances 'p,q,s;p,q,s'")

    p = add("density", "density estimates and proof-schema checks for integer sequences")
    p.add_argument("--seq", required=True, help="fib | pow:B | binom2 | rec:c1,c2/s1,s2 | list:a,b,...")
    p.add_argument("--n", type=_parse_big_int_arg, help="evaluation point, e.g. 1e15 or 2**30 (default 1e6)")
    p.add_argument("--measure", choices=("d", "eld", "ld", "all"), default="all")
    p.add_argument("--check", choices=("evensum", "block", "growth", "eld-bound", "ld-probe"))
    p.add_argument("--even", type=int, help="even element used as block length (--check block)")
    p.add_argument("--blocks", type=int, default=50)
    p.add_argument("--count", type=int, default=20, help="number of growth steps (--check growth)")

    p = add("partition", "explicit avoiding coloring of a window of Z")
    p.add_argument("--set", required=True, help="integers 'a,b,...' or 'all-odd'")
    p.add_argument("--window", type=int, help="window radius N, at least 2*max|u|")

    p = add("conjecture", "test the odd-only saturated sets of a finite abelian group against the parity forms")
    p.add_argument("--group", required=True)
    return parser


def _parse_big_int_arg(text: str) -> int:
    try:
        return _parse_big_int(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


COMMANDS = {
    "check": cmd_check,
    "saturated": cmd_saturated,
    "verify": cmd_verify,
    "density": cmd_density,
    "partition": cmd_partition,
    "conjecture": cmd_conjecture,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seed_free:
        print("avoidsets: error: --seed-free is reserved and not accepted (no randomness is used)", file=sys.stderr)
        return EXIT_USAGE
    out = _Out(args.format, args.command)
    try:
        code = COMMANDS[args.command](args, out)
    except BudgetExceeded as exc:
        out.set(error="budget", message=str(exc))
        out.say(f"budget exceeded: {exc}")
        out.emit()
        return EXIT_BUDGET
    except (UsageError, GroupError, ElementParseError, SequenceError, ValueError) as exc:
        print(f"avoidsets: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.set(exit_code=code)
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
