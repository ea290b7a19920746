"""Avoidability and density in the positive integers under addition.

The naturals are taken as ``{1, 2, 3, ...}``.  Sequences are described by a
small grammar (``fib``, ``pow:B``, ``binom2``, ``rec:c1,c2/s1,s2``,
``list:a,b,...``) and streamed as Python ints, so prefixes up to 10**18 and
beyond are cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import count, islice
from typing import Iterable, Iterator, Sequence

from .avoidance import AvoidabilityOutcome
from .bipartite import is_odd_cycle, two_color

__all__ = [
    "SequenceSpec",
    "SequenceError",
    "parse_sequence",
    "nat_is_avoidable",
    "verify_nat_partition",
    "verify_nat_cycle",
    "EvenSumObstruction",
    "evensum_obstruction",
    "prefix_avoidable",
    "DensityReport",
    "density_report",
    "BlockReport",
    "block_density_check",
    "GrowthReport",
    "fibonacci_growth_check",
    "BoundReport",
    "eld_bound_check",
    "ld_conjecture_probe",
    "GOLDEN_CONJUGATE",
    "ELD_TOLERANCE",
    "LD_PROBE_LIMIT",
]

# (sqrt(5) - 1) / 2
GOLDEN_CONJUGATE = (math.sqrt(5.0) - 1.0) / 2.0
ELD_TOLERANCE = 0.01
LD_PROBE_LIMIT = 0.628


class SequenceError(ValueError):
    """Malformed sequence description or a sequence that is not increasing."""


@dataclass(frozen=True)
class SequenceSpec:
    """A strictly increasing sequence of positive integers.

    ``kind`` is one of ``fib`` (1, 2, 3, 5, 8, ...), ``pow`` (B**0, B**1, ...),
    ``binom2`` (C(k, 2) for k >= 2: 1, 3, 6, 10, ...), ``rec`` (a_k = c1*a_{k-1}
    + c2*a_{k-2} from two seeds) or ``list``.
    """

    kind: str
    params: tuple[int, ...] = ()
    seeds: tuple[int, ...] = ()

    def __str__(self):
        if self.kind in ("fib", "binom2"):
            return self.kind
        if self.kind == "pow":
            return f"pow:{self.params[0]}"
        if self.kind == "rec":
            return "rec:" + ",".join(map(str, self.params)) + "/" + ",".join(map(str, self.seeds))
        return "list:" + ",".join(map(str, self.params))

    @property
    def is_finite(self) -> bool:
        return self.kind == "list"

    def _raw(self) -> Iterator[int]:
        if self.kind == "fib":
            a, b = 1, 2
            while True:
                yield a
                a, b = b, a + b
        elif self.kind == "pow":
            base = self.params[0]
            v = 1
            while True:
                yield v
                v *= base
        elif self.kind == "binom2":
            for k in count(2):
                yield k * (k - 1) // 2
        elif self.kind == "rec":
            c1, c2 = self.params
            a, b = self.seeds
            yield a
            while True:
                yield b
                a, b = b, c1 * b + c2 * a
        else:
            yield from self.params

    def __iter__(self) -> Iterator[int]:
        prev = 0
        for v in self._raw():
            if v <= prev:
                raise SequenceError(f"{self} is not strictly increasing at {v}")
            prev = v
            yield v

    def upto(self, limit: int) -> Iterator[int]:
        """Elements ``<= limit``."""
        for v in self:
            if v > limit:
                return
            yield v

    def take(self, k: int) -> list[int]:
        return list(islice(self, k))


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise SequenceError(f"bad integer list {text!r}") from exc


def parse_sequence(text: str) -> SequenceSpec:
    """Parse ``fib``, ``pow:B``, ``binom2``, ``rec:c1,c2/s1,s2`` or ``list:...``."""
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.lower()
    if head in ("fib", "fibonacci") and not rest:
        return SequenceSpec("fib")
    if head in ("binom2", "binomial2") and not rest:
        return SequenceSpec("binom2")
    if head in ("pow", "powers"):
        (base,) = _ints(rest) or (None,)
        if base is None or base < 2:
            raise SequenceError("pow needs a base >= 2")
        return SequenceSpec("pow", (base,))
    if head == "rec":
        coeffs, slash, seeds = rest.partition("/")
        c, s = _ints(coeffs), _ints(seeds)
        if not slash or len(c) != 2 or len(s) != 2:
            raise SequenceError("rec expects rec:c1,c2/s1,s2")
        if not 1 <= s[0] < s[1]:
            raise SequenceError("rec seeds must satisfy 1 <= s1 < s2")
        spec = SequenceSpec("rec", c, s)
        spec.take(8)  # reject non-increasing recurrences early
        return spec
    if head == "list":
        vals = tuple(sorted(set(_ints(rest))))
        if not vals:
            raise SequenceError("empty list")
        if vals[0] < 1:
            raise SequenceError("elements must be positive integers")
        return SequenceSpec("list", vals)
    raise SequenceError(f"unknown sequence {text!r}")


def _as_natset(u) -> tuple[int, ...]:
    if isinstance(u, SequenceSpec):
        if not u.is_finite:
            raise SequenceError(f"{u} is infinite; use a prefix")
        u = u.params
    vals = tuple(sorted(set(int(v) for v in u)))
    if vals and vals[0] < 1:
        raise ValueError("elements must be positive integers")
    return vals


# -- finite avoidability --------------------------------------------------------


def _sum_graph(u: Sequence[int], top: int) -> list[list[int]]:
    """Adjacency on vertices 1..top (index v-1) with a ~ b iff a != b, a+b in u."""
    adj: list[list[int]] = [[] for _ in range(top)]
    for t in u:
        for a in range(max(1, t - top), (t + 1) // 2):
            b = t - a
            adj[a - 1].append(b - 1)
            adj[b - 1].append(a - 1)
    return adj


def _outcome(adj) -> AvoidabilityOutcome:
    colors, cycle = two_color(adj)
    if colors is None:
        return AvoidabilityOutcome(False, cycle=tuple(v + 1 for v in cycle))
    return AvoidabilityOutcome(True, coloring=tuple(colors))


def nat_is_avoidable(u: Iterable[int]) -> AvoidabilityOutcome:
    """Decide avoidability of a finite set of positive integers.

    Only integers below ``max(u)`` can be joined, so the graph lives on
    ``[1, max(u) - 1]``.  ``coloring[i]`` is the color of the integer
    ``i + 1``; a cycle is reported as integers.
    """
    u = _as_natset(u)
    top = max(u[-1] - 1, 0) if u else 0
    return _outcome(_sum_graph(u, top))


def verify_nat_partition(u: Iterable[int], coloring: Sequence[int]) -> bool:
    """No two distinct same-colored integers of ``[1, len(coloring)]`` sum into ``u``."""
    u = _as_natset(u)
    top = len(coloring)
    for t in u:
        for a in range(max(1, t - top), (t + 1) // 2):
            if coloring[a - 1] == coloring[t - a - 1]:
                return False
    return True


def verify_nat_cycle(u: Iterable[int], cycle: Sequence[int]) -> bool:
    uset = set(_as_natset(u))
    return all(v >= 1 for v in cycle) and is_odd_cycle(
        list(cycle), lambda x, y: x != y and x + y in uset
    )


@dataclass(frozen=True)
class EvenSumObstruction:
    """A triple ``a < b < c`` with ``a + b > c`` and ``a + b + c`` even.

    ``witness`` lists the three integers that pairwise sum to ``a``, ``b``
    and ``c``; they form a triangle, so no partition works.
    """

    triple: tuple[int, int, int]
    witness: tuple[int, int, int]


def evensum_obstruction(u: Iterable[int]) -> EvenSumObstruction | None:
    """Lexicographically first even-sum triple of ``u``, if any."""
    vals = _as_natset(u)
    k = len(vals)
    for i in range(k):
        a = vals[i]
        for j in range(i + 1, k):
            b = vals[j]
            for m in range(j + 1, k):
                c = vals[m]
                if a + b <= c:
                    break
                if (a + b + c) % 2 == 0:
                    wit = tuple(sorted(((a + b - c) // 2, (a - b + c) // 2, (-a + b + c) // 2)))
                    return EvenSumObstruction((a, b, c), wit)
    return None


def prefix_avoidable(seq: SequenceSpec | Iterable[int], n: int) -> AvoidabilityOutcome:
    """2-color ``[1, n]`` with edges ``a + b`` in the sequence.

    A refutation (odd cycle) disproves avoidability of the whole sequence;
    a coloring is only evidence.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(seq, SequenceSpec):
        u = tuple(seq.upto(2 * n))
    else:
        u = tuple(v for v in _as_natset(seq) if v <= 2 * n)
    return _outcome(_sum_graph(u, n))


# -- densities --------------------------------------------------------------------


def _eld_at(m: int, evens_below: int) -> float | None:
    if evens_below < 1 or m <= 2:
        return None
    return math.exp(-math.log(m / 2) / evens_below)


def _ld_at(m: int, below: int) -> float | None:
    if below < 1 or m <= 1:
        return None
    return math.exp(-math.log(m) / below)


@dataclass(frozen=True)
class DensityReport:
    """Finite-``n`` values of the density expressions.

    ``d`` is ``U(n)/n``; ``eld`` is ``exp(-log(n/2)/U2(n))``; ``ld`` is
    ``exp(-log(n)/U(n))``.  The ``*_trailing_max`` fields hold the maximum of
    each expression over ``m`` in ``[n/10, n]``.  Undefined values are None.
    """

    sequence: str
    n: int
    count: int
    even_count: int
    d: float
    eld: float | None
    ld: float | None
    d_trailing_max: float
    eld_trailing_max: float | None
    ld_trailing_max: float | None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _max_opt(values):
    vals = [v for v in values if v is not None]
    return max(vals) if vals else None


def density_report(seq: SequenceSpec | Iterable[int], n: int) -> DensityReport:
    """Evaluate d, ELD and LD at ``n`` plus their trailing maxima.

    Between consecutive jumps of the counts every expression decreases in
    ``m``, so the trailing maxima are attained at ``m = n // 10`` or just
    after an element, at ``m = e + 1``.
    """
    n = int(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    if isinstance(seq, SequenceSpec):
        elems = list(seq.upto(n - 1))
        name = str(seq)
    else:
        elems = [v for v in _as_natset(seq) if v < n]
        name = "list:" + ",".join(map(str, elems))
    if not elems:
        raise ValueError(f"degenerate prefix: no elements below {n}")
    total = len(elems)
    evens = sum(1 for v in elems if v % 2 == 0)

    lo = max(n // 10, 2)
    probes = [lo] + [e + 1 for e in elems if lo < e + 1 <= n]
    d_max = eld_max = ld_max = None
    below = sum(1 for v in elems if v < lo)
    evens_below = sum(1 for v in elems if v < lo and v % 2 == 0)
    idx = below
    for m in probes:
        while idx < total and elems[idx] < m:
            evens_below += elems[idx] % 2 == 0
            idx += 1
        below = idx
        d_max = _max_opt([d_max, below / m])
        eld_max = _max_opt([eld_max, _eld_at(m, evens_below)])
        ld_max = _max_opt([ld_max, _ld_at(m, below)])
    return DensityReport(
        sequence=name,
        n=n,
        count=total,
        even_count=evens,
        d=total / n,
        eld=_eld_at(n, evens),
        ld=_ld_at(n, total),
        d_trailing_max=d_max,
        eld_trailing_max=eld_max,
        ld_trailing_max=ld_max,
    )


# -- proof-schema checks ----------------------------------------------------------


@dataclass(frozen=True)
class BlockReport:
    """Counts of ``u`` in the blocks ``{kN+1, ..., (k+1)N}``, ``k = 1..blocks``.

    ``violation`` is ``(k, members)`` for the first block holding three or
    more elements, and ``triple`` the even-sum triple it implies.
    ``obstruction`` is set when the input already fails the even-sum
    precondition on the tested range.
    """

    block_size: int
    counts: tuple[int, ...]
    violation: tuple[int, tuple[int, ...]] | None = None
    triple: tuple[int, int, int] | None = None
    obstruction: EvenSumObstruction | None = None

    @property
    def passed(self) -> bool:
        return self.violation is None and self.obstruction is None


def _finite_prefix(u, limit: int) -> tuple[int, ...]:
    if isinstance(u, SequenceSpec):
        return tuple(u.upto(limit))
    return tuple(v for v in _as_natset(u) if v <= limit)


def block_density_check(u, even_element: int, blocks: int) -> BlockReport:
    """Check that each block of length ``N = even_element`` past ``N`` holds at most two elements."""
    N = int(even_element)
    if N < 2 or N % 2:
        raise ValueError("the block length must be an even element >= 2")
    if blocks < 1:
        raise ValueError("blocks must be >= 1")
    limit = (blocks + 1) * N
    vals = _finite_prefix(u, limit)
    if N not in vals:
        raise ValueError(f"{N} is not an element of the set")
    counts = []
    violation = triple = None
    for k in range(1, blocks + 1):
        members = tuple(v for v in vals if k * N < v <= (k + 1) * N)
        counts.append(len(members))
        if violation is None and len(members) >= 3:
            violation = (k, members)
            # two of any three block members share parity and differ by < N
            found = evensum_obstruction((N,) + members[:3])
            triple = found.triple if found else None
    return BlockReport(N, tuple(counts), violation, triple, evensum_obstruction(vals))


def _fib(k: int) -> int:
    a, b = 1, 1  # F_1 = F_2 = 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class GrowthReport:
    """Outcome of the growth check on the even elements ``x < y < a_1 < a_2 < ...``.

    ``failure`` names the first violated inequality as ``(k, reason)``.
    """

    x: int
    y: int
    checked: tuple[int, ...]
    failure: tuple[int, str] | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def fibonacci_growth_check(u, count_: int) -> GrowthReport:
    """Check ``a_1 > x+y``, ``a_2 > a_1+y``, ``a_k > a_{k-1}+a_{k-2}`` and ``a_k > F_k x + F_{k+1} y``.

    ``u`` may be a sequence spec or any (possibly infinite) increasing iterable.
    """
    need = count_ + 2
    evens = []
    for v in u:
        if v % 2 == 0:
            evens.append(int(v))
            if len(evens) == need:
                break
    if len(evens) < need:
        raise ValueError(f"need {need} even elements, found {len(evens)}")
    x, y, rest = evens[0], evens[1], evens[2:]
    for k, a in enumerate(rest, start=1):
        if k == 1:
            prev_sum, what = x + y, "a_1 > x + y"
        elif k == 2:
            prev_sum, what = rest[0] + y, "a_2 > a_1 + y"
        else:
            prev_sum, what = rest[k - 2] + rest[k - 3], f"a_{k} > a_{k-1} + a_{k-2}"
        if not a > prev_sum:
            return GrowthReport(x, y, tuple(rest[:k]), (k, f"{what} fails: {a} <= {prev_sum}"))
        bound = _fib(k) * x + _fib(k + 1) * y
        if not a > bound:
            return GrowthReport(x, y, tuple(rest[:k]), (k, f"a_{k} > F_k x + F_(k+1) y fails: {a} <= {bound}"))
    return GrowthReport(x, y, tuple(rest))


@dataclass(frozen=True)
class BoundReport:
    """Comparison of a density estimate with the golden-ratio bound.

    ``verdict`` is PASS or FAIL, UNDEFINED when the prefix has no (even)
    elements to measure, or DECLINED when a prefix probe refuted
    avoidability (``refutation`` then holds the odd cycle).
    """

    sequence: str
    measure: str
    verdict: str
    estimate: float | None
    limit: float
    report: DensityReport | None = None
    refutation: tuple[int, ...] | None = None
    obstruction: EvenSumObstruction | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


def _verdict(estimate, limit) -> str:
    if estimate is None:
        return "UNDEFINED"
    return "PASS" if estimate <= limit else "FAIL"


def _refute(seq, probe: int):
    out = prefix_avoidable(seq, probe)
    if out.avoidable:
        return None, None
    obstruction = evensum_obstruction(_finite_prefix(seq, 2 * probe))
    return out.cycle, obstruction


def eld_bound_check(seq: SequenceSpec, n: int, probe: int = 200) -> BoundReport:
    """ELD estimate at ``n`` against ``(sqrt(5)-1)/2 + 0.01``, unless refuted."""
    limit = GOLDEN_CONJUGATE + ELD_TOLERANCE
    cycle, obstruction = _refute(seq, probe)
    if cycle is not None:
        return BoundReport(str(seq), "eld", "DECLINED", None, limit, None, cycle, obstruction)
    rep = density_report(seq, n)
    return BoundReport(str(seq), "eld", _verdict(rep.eld, limit), rep.eld, limit, rep)


def ld_conjecture_probe(seq: SequenceSpec, n: int, probe: int = 200) -> BoundReport:
    """Conjecture evidence: LD trailing maximum at ``n`` stays at or below 0.628."""
    cycle, obstruction = _refute(seq, probe)
    if cycle is not None:
        return BoundReport(str(seq), "ld", "DECLINED", None, LD_PROBE_LIMIT, None, cycle, obstruction)
    rep = density_report(seq, n)
    est = rep.ld_trailing_max
    return BoundReport(str(seq), "ld", _verdict(est, LD_PROBE_LIMIT), est, LD_PROBE_LIMIT, rep)
