"""Minimum backward-arc search over ranking classes and the 3/4 harness.

All fractions in this module are exact rationals.  Minima over rank classes
are taken over weak orders (ordered set partitions of the vertex set),
since the backward count and every predicate here depend only on the weak
order induced by the ranks; for the linear axiom the integer level values
1..k are representatives, so those minima are lower-bound candidates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import EmptyClassError, ResourceLimitError
from .ranking import (
    BackwardReport,
    FairnessClass,
    Ranking,
    backward_arcs,
    copeland_ranking,
    is_fair,
)
from .tournament import Tournament, enumerate_all, gen_composite, gen_random

INJECTIVE_SEARCH_CAP = 10
WEAK_ORDER_CAP = 6


@dataclass(frozen=True)
class MinBackwardResult:
    count: int
    fraction: Fraction
    witness: Ranking
    search_space: str  # "permutations" | "weakOrders" | "closedForm"


# -- weak order enumeration -------------------------------------------------


def iter_weak_orders(items: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """All ordered set partitions of items, blocks listed bottom level first.

    Deterministic order: the first block runs through the nonempty subsets
    of the remaining items in increasing bitmask order.
    """
    items = tuple(sorted(items))

    def rec(rest: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if not rest:
            yield ()
            return
        k = len(rest)
        for mask in range(1, 1 << k):
            block = tuple(rest[i] for i in range(k) if mask >> i & 1)
            remaining = tuple(rest[i] for i in range(k) if not mask >> i & 1)
            for tail in rec(remaining):
                yield (block,) + tail

    return rec(items)


def weak_order_ranking(blocks: Sequence[Sequence[int]]) -> Ranking:
    """Assign level value k to the k-th block (1-based); exact and positive."""
    values = {}
    for level, block in enumerate(blocks, start=1):
        for v in block:
            values[v] = Fraction(level)
    return Ranking.exact(values)


# -- exact minimizers -------------------------------------------------------


def min_backward_injective(t: Tournament) -> MinBackwardResult:
    """Exact minimum over all injective rankings, by branch and bound.

    Orders are built lowest rank first; placing v adds one backward arc per
    out-neighbor still unplaced.  A first pass finds the optimum with
    aggressive pruning; a second lexicographic pass recovers the lex-least
    optimal placement order.
    """
    if t.n > INJECTIVE_SEARCH_CAP:
        raise ResourceLimitError(f"permutation search capped at n <= {INJECTIVE_SEARCH_CAP}")
    verts = list(t.vertices())
    best = t.num_arcs + 1

    def search(unplaced: frozenset, cost: int) -> None:
        nonlocal best
        if cost >= best:
            return
        if not unplaced:
            best = cost
            return
        for v in sorted(unplaced):
            rest = unplaced - {v}
            search(rest, cost + len(t.out_set(v) & rest))

    search(frozenset(verts), 0)

    witness_order: List[int] = []

    def recover(unplaced: frozenset, cost: int, prefix: List[int]) -> bool:
        if cost > best:
            return False
        if not unplaced:
            witness_order.extend(prefix)
            return cost == best
        for v in sorted(unplaced):
            rest = unplaced - {v}
            if recover(rest, cost + len(t.out_set(v) & rest), prefix + [v]):
                return True
        return False

    recover(frozenset(verts), 0, [])
    witness = Ranking.exact({v: pos for pos, v in enumerate(witness_order, start=1)})
    fraction = Fraction(best, t.num_arcs) if t.num_arcs else Fraction(0)
    return MinBackwardResult(best, fraction, witness, "permutations")


def min_backward_copeland_closed_form(t: Tournament) -> MinBackwardResult:
    """Minimum over strict-Copeland-fair rankings, in closed form.

    Any strict Copeland fair ranking makes every arc that rises in
    out-degree backward, and the out-degree ranking makes exactly those
    arcs backward, so the minimum is the count of degree-rising arcs.
    """
    deg = {x: t.out_degree(x) for x in t.vertices()}
    count = sum(1 for (x, y) in t.arcs() if deg[x] < deg[y])
    witness = copeland_ranking(t)
    fraction = Fraction(count, t.num_arcs) if t.num_arcs else Fraction(0)
    return MinBackwardResult(count, fraction, witness, "closedForm")


def min_backward_fair(t: Tournament, c: FairnessClass) -> MinBackwardResult:
    """Exact minimum over a fairness class by weak-order enumeration.

    The k levels of each weak order get values 1..k, which is positive (as
    the linear axiom requires) and covers every rank-induced weak order.
    """
    if t.n > WEAK_ORDER_CAP:
        raise ResourceLimitError(f"weak-order enumeration capped at n <= {WEAK_ORDER_CAP}")
    best: Optional[Tuple[int, Tuple[Fraction, ...], Ranking]] = None
    for blocks in iter_weak_orders(list(t.vertices())):
        r = weak_order_ranking(blocks)
        if not is_fair(t, r, c):
            continue
        count = backward_arcs(t, r).count
        key = (count, tuple(r[v] for v in t.vertices()))
        if best is None or key < (best[0], best[1]):
            best = (key[0], key[1], r)
    if best is None:
        raise EmptyClassError(f"no weak-order ranking satisfies {c.value}")
    count, _, witness = best
    fraction = Fraction(count, t.num_arcs) if t.num_arcs else Fraction(0)
    return MinBackwardResult(count, fraction, witness, "weakOrders")


# -- extremal family sweep --------------------------------------------------


def composite_min_backward_count(l: int) -> int:
    """Closed-form minimal strict-Copeland backward count on the layered family."""
    return l * l * (2 * l + 1) * (3 * l + 1)


def composite_edge_count(l: int) -> int:
    return 2 * l * (l + 1) * (2 * l + 1) ** 2


def composite_fraction(l: int) -> Fraction:
    """Simplified backward fraction l(3l+1) / (2(l+1)(2l+1)) of the layered family."""
    return Fraction(l * (3 * l + 1), 2 * (l + 1) * (2 * l + 1))


def copeland_bound(n: int) -> Fraction:
    """Per-size bound on the strict-Copeland backward fraction: (3l-2)/(4l-2)
    for n = 2l, (3l+1)/(4l+2) for n = 2l+1; both are < 3/4."""
    if n < 2:
        return Fraction(0)
    if n % 2 == 0:
        l = n // 2
        return Fraction(3 * l - 2, 4 * l - 2)
    l = (n - 1) // 2
    return Fraction(3 * l + 1, 4 * l + 2)


@dataclass(frozen=True)
class EmnRow:
    l: int
    n: int
    edges: int
    min_backward: int
    fraction: Fraction
    bound: Fraction
    materialized: bool

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "edges": self.edges,
            "min_backward": self.min_backward,
            "fraction": {"num": self.fraction.numerator, "den": self.fraction.denominator},
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "materialized": self.materialized,
        }


@dataclass(frozen=True)
class EmnReport:
    family: str
    rows: Tuple[EmnRow, ...]
    limit: Fraction = Fraction(3, 4)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rows": [row.to_json() for row in self.rows],
            "limit": {"num": self.limit.numerator, "den": self.limit.denominator},
        }

    def to_csv(self) -> str:
        lines = ["l,n,edges,min_backward,fraction,bound"]
        for row in self.rows:
            lines.append(
                f"{row.l},{row.n},{row.edges},{row.min_backward},"
                f"{row.fraction.numerator}/{row.fraction.denominator},"
                f"{row.bound.numerator}/{row.bound.denominator}"
            )
        return "\n".join(lines) + "\n"


def emn_sweep_composite(l_max: int, materialize_up_to: int = 0) -> EmnReport:
    """Backward fractions of the layered family approaching 3/4 from below.

    For l <= materialize_up_to the tournament is actually built and the
    closed-form count cross-checked against the degree-rising arc count.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    rows = []
    for l in range(1, l_max + 1):
        n = (2 * l + 1) ** 2
        edges = composite_edge_count(l)
        count = composite_min_backward_count(l)
        fraction = composite_fraction(l)
        assert fraction == Fraction(count, edges)
        materialized = l <= materialize_up_to
        if materialized:
            t = gen_composite(l)
            computed = min_backward_copeland_closed_form(t)
            if computed.count != count or t.num_arcs != edges:
                raise AssertionError(
                    f"materialized l={l} disagrees with closed form: "
                    f"{computed.count} vs {count}"
                )
        rows.append(EmnRow(l, n, edges, count, fraction, copeland_bound(n), materialized))
    return EmnReport("composite", tuple(rows))


# -- bound checks -----------------------------------------------------------


@dataclass(frozen=True)
class BoundCheckReport:
    n: int
    mode: str
    checked: int
    bound: Fraction
    max_fraction: Fraction
    witness: Optional[Tournament]
    all_within: bool


def verify_copeland_upper_bound(
    n: int, mode: str = "exhaustive", samples: int = 100, seed: int = 0
) -> BoundCheckReport:
    """Check the per-size strict-Copeland bound over all (or sampled) tournaments."""
    if mode == "exhaustive":
        if n > 5:
            raise ResourceLimitError("exhaustive bound check capped at n <= 5")
        instances = enumerate_all(n)
    elif mode == "random":
        instances = (gen_random(n, seed + i) for i in range(samples))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    bound = copeland_bound(n)
    max_fraction = Fraction(0)
    witness = None
    checked = 0
    ok = True
    for t in instances:
        frac = min_backward_copeland_closed_form(t).fraction
        checked += 1
        if frac > max_fraction or witness is None:
            max_fraction = frac
            witness = t
        if frac > bound or frac >= Fraction(3, 4):
            ok = False
    return BoundCheckReport(n, mode, checked, bound, max_fraction, witness, ok)


@dataclass(frozen=True)
class ReversalRow:
    seed: Optional[int]
    min_backward: int
    half_edges: int

    @property
    def ok(self) -> bool:
        return self.min_backward <= self.half_edges


@dataclass(frozen=True)
class ReversalReport:
    n: int
    rows: Tuple[ReversalRow, ...]

    @property
    def all_within(self) -> bool:
        return all(row.ok for row in self.rows)


def reversal_bound_check(n: int, samples: int = 100, seed: int = 0) -> ReversalReport:
    """Min injective backward count never exceeds half the arcs: an ordering
    or its reverse keeps at least half the arcs forward."""
    if n > 7:
        raise ResourceLimitError("exact reversal check capped at n <= 7")
    rows = []
    half = n * (n - 1) // 2 // 2
    for i in range(samples):
        t = gen_random(n, seed + i)
        res = min_backward_injective(t)
        rows.append(ReversalRow(seed + i, res.count, half))
    return ReversalReport(n, tuple(rows))
