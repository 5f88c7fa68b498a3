"""Tournament representation, generators, SCC decomposition, and text I/O.

Vertices are labeled 1..n.  A tournament is a complete loop-free digraph:
for every unordered pair exactly one of the two directed arcs is present.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import (
    DuplicateOrConflictError,
    LoopArcError,
    MissingPairError,
    ResourceLimitError,
    TournamentSyntaxError,
    UnknownVertexError,
)

DEFAULT_VERTEX_CAP = 10_000
ENUMERATION_CAP = 6


class Tournament:
    """Immutable tournament on vertices 1..n.

    Out-neighborhoods are stored as frozensets, so arc tests are O(1).
    Instances built through this constructor are trusted; use
    :func:`build_tournament` to validate raw arc lists.
    """

    __slots__ = ("n", "_out")

    def __init__(self, n: int, out_sets: Sequence[frozenset]):
        if n < 1:
            raise ValueError("tournament needs at least one vertex")
        if len(out_sets) != n:
            raise ValueError("out_sets length must equal n")
        self.n = n
        self._out: Tuple[frozenset, ...] = tuple(frozenset(s) for s in out_sets)

    # -- queries -----------------------------------------------------------

    def _check_vertex(self, x: int) -> None:
        if not (1 <= x <= self.n):
            raise UnknownVertexError(f"vertex {x} not in 1..{self.n}")

    def has_arc(self, x: int, y: int) -> bool:
        self._check_vertex(x)
        self._check_vertex(y)
        return y in self._out[x - 1]

    def out_set(self, x: int) -> frozenset:
        self._check_vertex(x)
        return self._out[x - 1]

    def out_degree(self, x: int) -> int:
        return len(self.out_set(x))

    @property
    def num_arcs(self) -> int:
        return self.n * (self.n - 1) // 2

    def arcs(self) -> Iterator[Tuple[int, int]]:
        """Yield all arcs in lexicographic order of (x, y)."""
        for x in range(1, self.n + 1):
            for y in sorted(self._out[x - 1]):
                yield (x, y)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def induced(self, vertex_subset: Iterable[int]) -> Tuple["Tournament", Tuple[int, ...]]:
        """Induced subtournament on the given vertices.

        Returns the subtournament (relabeled 1..k in increasing original
        label order) together with the tuple mapping new labels to old ones.
        """
        old = tuple(sorted(set(vertex_subset)))
        for v in old:
            self._check_vertex(v)
        keep = set(old)
        index = {v: i + 1 for i, v in enumerate(old)}
        out_sets = [
            frozenset(index[w] for w in self._out[v - 1] if w in keep) for v in old
        ]
        return Tournament(len(old), out_sets), old

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, arcs={self.num_arcs})"


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components ordered losers-first.

    For x in components[i] and y in components[j] with i < j, the cross
    arc is y -> x: component 0 is the sink of the condensation.
    """

    components: Tuple[frozenset, ...]

    def __len__(self) -> int:
        return len(self.components)

    def component_of(self, x: int) -> int:
        for i, comp in enumerate(self.components):
            if x in comp:
                return i
        raise UnknownVertexError(f"vertex {x} in no component")


# -- construction and validation ------------------------------------------


def build_tournament(n: int, arc_list: Iterable[Tuple[int, int]]) -> Tournament:
    """Validate an explicit arc list and build the tournament.

    Every unordered pair must be covered exactly once and in one direction.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = [set() for _ in range(n)]
    seen = set()
    for (x, y) in arc_list:
        if not (1 <= x <= n) or not (1 <= y <= n):
            raise UnknownVertexError(f"arc ({x},{y}) references vertex outside 1..{n}")
        if x == y:
            raise LoopArcError(f"loop arc ({x},{x})")
        if (x, y) in seen or (y, x) in seen:
            raise DuplicateOrConflictError(f"pair {{{x},{y}}} oriented twice")
        seen.add((x, y))
        out[x - 1].add(y)
    expected = n * (n - 1) // 2
    if len(seen) != expected:
        for x in range(1, n + 1):
            for y in range(x + 1, n + 1):
                if (x, y) not in seen and (y, x) not in seen:
                    raise MissingPairError(f"pair {{{x},{y}}} has no arc")
        raise MissingPairError("arc list does not cover all pairs")
    return Tournament(n, [frozenset(s) for s in out])


# -- generators ------------------------------------------------------------


def gen_rotational(l: int) -> Tournament:
    """Rotational tournament on 2l+1 vertices: i beats i+1, ..., i+l (mod 2l+1)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    n = 2 * l + 1
    out_sets = []
    for i in range(1, n + 1):
        out_sets.append(frozenset((i - 1 + k) % n + 1 for k in range(1, l + 1)))
    return Tournament(n, out_sets)


def composite_vertex(m: int, i: int, l: int) -> int:
    """Flatten the layered vertex (m, i) to its 1-based label."""
    return (m - 1) * (2 * l + 1) + i


def gen_composite(l: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> Tournament:
    """Layered tournament on (2l+1)^2 vertices over the rotational pattern.

    Vertex (m, i) beats (n, j) iff
      * i == j and m > n, or
      * m == n and the rotational tournament has i -> j, or
      * m != n, i != j, and the rotational tournament has m -> n.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    s = 2 * l + 1
    n_total = s * s
    if n_total > max_vertices:
        raise ResourceLimitError(
            f"composite instance needs {n_total} vertices, cap is {max_vertices}"
        )
    rot = gen_rotational(l)
    out_sets = []
    for m in range(1, s + 1):
        beats_m = rot.out_set(m)
        for i in range(1, s + 1):
            beats_i = rot.out_set(i)
            targets = set()
            for mm in range(1, m):
                targets.add(composite_vertex(mm, i, l))
            for j in beats_i:
                targets.add(composite_vertex(m, j, l))
            for nn in beats_m:
                for j in range(1, s + 1):
                    if j != i:
                        targets.add(composite_vertex(nn, j, l))
            out_sets.append(frozenset(targets))
    return Tournament(n_total, out_sets)


def gen_random(n: int, seed: int) -> Tournament:
    """Orient each pair by one coin flip of a seeded generator."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    out = [set() for _ in range(n)]
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if rng.random() < 0.5:
                out[x - 1].add(y)
            else:
                out[y - 1].add(x)
    return Tournament(n, [frozenset(s) for s in out])


def enumerate_all(n: int) -> Iterator[Tournament]:
    """Yield all 2^C(n,2) labeled tournaments on n vertices exactly once."""
    if n > ENUMERATION_CAP:
        raise ResourceLimitError(f"enumeration capped at n <= {ENUMERATION_CAP}")
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        out = [set() for _ in range(n)]
        for k, (x, y) in enumerate(pairs):
            if mask >> k & 1:
                out[y - 1].add(x)
            else:
                out[x - 1].add(y)
        yield Tournament(n, [frozenset(s) for s in out])


# -- strongly connected components ----------------------------------------


def scc_decompose(t: Tournament) -> SccDecomposition:
    """Tarjan's algorithm, iterative.

    Tarjan emits components sinks-first, which is exactly the losers-first
    order required here: every cross arc goes from a later component to an
    earlier one.
    """
    n = t.n
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    visited = [False] * (n + 1)
    stack = []
    components = []
    counter = [1]

    for root in range(1, n + 1):
        if visited[root]:
            continue
        work = [(root, iter(sorted(t.out_set(root))))]
        visited[root] = True
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(sorted(t.out_set(w)))))
                    advanced = True
                    break
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.add(w)
                    if w == v:
                        break
                components.append(frozenset(comp))
    return SccDecomposition(tuple(components))


def is_strongly_connected(t: Tournament) -> bool:
    return len(scc_decompose(t)) == 1


# -- text I/O --------------------------------------------------------------


def serialize_tournament(t: Tournament) -> str:
    """Canonical matrix format: n, then n rows of '0'/'1' characters."""
    lines = [str(t.n)]
    for x in range(1, t.n + 1):
        row = t.out_set(x)
        lines.append("".join("1" if y in row else "0" for y in range(1, t.n + 1)))
    return "\n".join(lines) + "\n"


def parse_tournament(text: str) -> Tournament:
    """Parse the matrix format or the "n=<N>" edge-list format."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise TournamentSyntaxError("empty input")
    head = lines[0]
    if head.startswith("n="):
        try:
            n = int(head[2:])
        except ValueError:
            raise TournamentSyntaxError(f"bad header {head!r}") from None
        arcs = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise TournamentSyntaxError(f"bad edge line {ln!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise TournamentSyntaxError(f"bad edge line {ln!r}") from None
            arcs.append((u, v))
        return build_tournament(n, arcs)
    try:
        n = int(head)
    except ValueError:
        raise TournamentSyntaxError(f"bad vertex count {head!r}") from None
    if len(lines) != n + 1:
        raise TournamentSyntaxError(f"expected {n} matrix rows, found {len(lines) - 1}")
    arcs = []
    for x, row in enumerate(lines[1:], start=1):
        if len(row) != n or any(c not in "01" for c in row):
            raise TournamentSyntaxError(f"bad matrix row {row!r}")
        for y, c in enumerate(row, start=1):
            if c == "1":
                arcs.append((x, y))
    return build_tournament(n, arcs)
