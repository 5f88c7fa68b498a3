"""Simplicial rankings, the rank-sum recalculation, and the Perron solver.

The recalculation sends a simplicial ranking r to the normalized vector of
out-neighborhood rank sums.  Its fixed points on a strongly connected
tournament are Perron eigenvectors of the 0/1 adjacency matrix; combining
per-component eigenvectors with geometric scaling yields a strictly
positive ranking that satisfies the linear fairness axiom on any
tournament.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import (
    NoConvergenceError,
    NotStronglyConnectedError,
    VerificationFailedError,
    ZeroNormalizerError,
)
from .ranking import DEFAULT_EPS, FairnessClass, Ranking, is_fair
from .tournament import SccDecomposition, Tournament, scc_decompose

SimplicialRanking = Dict[int, Union[float, "Fraction"]]  # vertex -> mass, sums to 1


@dataclass(frozen=True)
class RecalcConfig:
    tolerance: float = 1e-12
    max_iterations: int = 100_000
    shift: float = 1.0

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.shift < 0:
            raise ValueError("shift must be non-negative")


@dataclass(frozen=True)
class PerronResult:
    """Positive simplicial fixed point on one strongly connected component."""

    vertices: Tuple[int, ...]
    ranking: Dict[int, float]
    eigenvalue: float
    residual: float
    iterations: int


def metric_distance(r1: Mapping[int, float], r2: Mapping[int, float]) -> float:
    """Max-norm distance between two rankings on the same vertex set."""
    return max(abs(r1[v] - r2[v]) for v in r1)


def uniform_ranking(t: Tournament) -> SimplicialRanking:
    return {x: 1.0 / t.n for x in t.vertices()}


def recalc_apply(t: Tournament, r: SimplicialRanking) -> SimplicialRanking:
    """One step of the rank-sum recalculation: r(x) <- sum over x's out-set, normalized.

    Works on floats and on exact Fractions alike.
    """
    sums = {x: sum(r[z] for z in t.out_set(x)) for x in t.vertices()}
    lam = sum(sums.values())
    if lam == 0:
        raise ZeroNormalizerError("rank-sum normalizer is zero")
    return {x: sums[x] / lam for x in t.vertices()}


def iterate_to_fixed_point(
    t: Tournament,
    recalc: Callable[[SimplicialRanking], SimplicialRanking],
    r0: SimplicialRanking,
    cfg: RecalcConfig = RecalcConfig(),
) -> SimplicialRanking:
    """Best-effort plain iteration of an arbitrary recalculation.

    Returns r with d(recalc(r), r) <= tolerance, or raises NoConvergenceError
    (plain iteration need not converge, e.g. on periodic orbits).
    """
    r = dict(r0)
    for _ in range(cfg.max_iterations + 1):
        nxt = recalc(r)
        if metric_distance(nxt, r) <= cfg.tolerance:
            return r
        r = nxt
    raise NoConvergenceError(cfg.max_iterations)


def perron_fixed_point(
    t: Tournament,
    cfg: RecalcConfig = RecalcConfig(),
    vertices: Optional[Tuple[int, ...]] = None,
) -> PerronResult:
    """Dominant eigenvector of one strongly connected component.

    Power iteration on A + shift*I; the shift makes the iteration matrix
    primitive for every irreducible component (the plain recalculation can
    cycle, e.g. with period 3 on the 3-cycle) without moving eigenvectors.
    Stops when the unshifted residual max|lambda*r - A*r| <= tolerance.
    """
    if vertices is None:
        vertices = tuple(t.vertices())
        sub, labels = t, tuple(t.vertices())
    else:
        sub, labels = t.induced(vertices)
    k = sub.n
    if k < 3 or len(scc_decompose(sub)) != 1:
        raise NotStronglyConnectedError(
            f"component of size {k} is not a strongly connected tournament with n >= 3"
        )
    a = np.zeros((k, k))
    for x in range(1, k + 1):
        for y in sub.out_set(x):
            a[x - 1, y - 1] = 1.0
    r = np.full(k, 1.0 / k)
    for it in range(1, cfg.max_iterations + 1):
        ar = a @ r
        lam = float(ar.sum())  # r sums to 1, so sum(A r) estimates lambda
        residual = float(np.max(np.abs(lam * r - ar)))
        if residual <= cfg.tolerance:
            ranking = {labels[i]: float(r[i]) for i in range(k)}
            return PerronResult(labels, ranking, lam, residual, it - 1)
        nr = ar + cfg.shift * r
        r = nr / nr.sum()
    raise NoConvergenceError(cfg.max_iterations)


@dataclass(frozen=True)
class ComponentSolve:
    vertices: Tuple[int, ...]
    perron: Optional[PerronResult]  # None for singleton components


@dataclass(frozen=True)
class LinearFairResult:
    """Assembled linear-fair ranking with its per-component solver data."""

    ranking: Ranking
    components: Tuple[ComponentSolve, ...]
    mu: Tuple[float, ...]
    verified: bool
    escalations: int

    def to_json(self) -> dict:
        return {
            "components": [
                {
                    "vertices": list(c.vertices),
                    "lambda": None if c.perron is None else c.perron.eigenvalue,
                    "residual": None if c.perron is None else c.perron.residual,
                    "iterations": 0 if c.perron is None else c.perron.iterations,
                }
                for c in self.components
            ],
            "mu": list(self.mu),
            "ranking": [self.ranking[v] for v in sorted(self.ranking.values.keys())],
            "verified": self.verified,
            "escalations": self.escalations,
        }


def linear_fair_ranking(
    t: Tournament,
    cfg: RecalcConfig = RecalcConfig(),
    predicate_eps: float = DEFAULT_EPS,
    gap: float = 2.0,
    max_escalations: int = 20,
) -> LinearFairResult:
    """Construct a strictly positive ranking satisfying the linear fairness axiom.

    Per-component Perron eigenvectors (singletons get rank 1) are scaled so
    each component sits strictly above the previous one; the assembly is
    verified against the linear fairness predicate and the inter-component
    gap factor is escalated (squared) on failure.
    """
    decomp = scc_decompose(t)
    solves: List[ComponentSolve] = []
    base: List[Dict[int, float]] = []
    for comp in decomp.components:
        verts = tuple(sorted(comp))
        if len(verts) == 1:
            solves.append(ComponentSolve(verts, None))
            base.append({verts[0]: 1.0})
        else:
            res = perron_fixed_point(t, cfg, verts)
            solves.append(ComponentSolve(verts, res))
            base.append(dict(res.ranking))

    g = gap
    last_verdict = None
    for escalation in range(max_escalations + 1):
        mu = [1.0]
        for i in range(1, len(base)):
            prev_max = max(base[i - 1].values())
            cur_min = min(base[i].values())
            mu.append(mu[i - 1] * (prev_max / cur_min) * g)
        values = {}
        for i, b in enumerate(base):
            for v, val in b.items():
                values[v] = mu[i] * val
        if all(math.isfinite(val) for val in values.values()):
            ranking = Ranking.approx(values, predicate_eps)
            verdict = is_fair(t, ranking, FairnessClass.LIN)
            if verdict.ok:
                return LinearFairResult(
                    ranking, tuple(solves), tuple(mu), True, escalation
                )
            last_verdict = verdict
        g = g * g
    raise VerificationFailedError(
        None if last_verdict is None else last_verdict.certificate
    )
