"""Weighted-sum cost-quality targets, parameter-grid minimization, and
frontier comparison across construction families.

A target is ``w * quality + (1 - w) * cost`` where quality is one of the
three path-length metrics (global average distance, greedy navigation,
two-level navigation) and cost is the realized shortcut length per node of
the same instances.  Quality and cost are evaluated once per grid point
and reused across weights, since the target is linear in both.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .families import GeneratorSpec, as_template
from .metrics import EnsembleStats, measure
from .navigation import GREEDY, TWO_LEVEL, average_navigation_length
from .network import wiring_cost
from .stochastic import ParameterError

logger = logging.getLogger(__name__)

__all__ = [
    "TargetKind",
    "FrontierPoint",
    "GridPointEval",
    "ComparisonRow",
    "ComparisonTable",
    "default_weight_grid",
    "target_function",
    "evaluate_grid",
    "sweep_minimize",
    "percentile_frontier",
    "compare_families",
]


class TargetKind(enum.Enum):
    """Which path-length metric plays the quality role in the target."""

    DISTANCE = "distance"
    GREEDY_NAV = "greedy"
    TWO_LEVEL_NAV = "two-level"

    @property
    def metric_name(self) -> str:
        return _KIND_METRIC[self]


_KIND_METRIC = {
    TargetKind.DISTANCE: "average_distance",
    TargetKind.GREEDY_NAV: "nav_greedy",
    TargetKind.TWO_LEVEL_NAV: "nav_two_level",
}


def default_weight_grid() -> tuple[float, ...]:
    """Quality weights 0.0, 0.05, ..., 1.0."""
    return tuple(round(0.05 * i, 2) for i in range(21))


def target_function(kind: TargetKind, w: float, quality: float, cost: float) -> float:
    """Weighted sum ``w * quality + (1 - w) * cost`` for weight ``w`` in [0, 1]."""
    if not isinstance(kind, TargetKind):
        raise ParameterError(f"unknown target kind {kind!r}")
    if not 0.0 <= w <= 1.0:
        raise ParameterError(f"quality weight must be in [0, 1], got {w}")
    return w * quality + (1.0 - w) * cost


@dataclass(frozen=True)
class GridPointEval:
    """Per-instance metric values for one grid point (instance order)."""

    spec: GeneratorSpec
    cost: tuple[float, ...]
    quality: Mapping[str, tuple[float, ...]]

    @property
    def n(self) -> int:
        return len(self.cost)

    def mean_cost(self) -> float:
        return float(np.mean(self.cost))

    def mean_quality(self, kind: TargetKind) -> float:
        return float(np.mean(self.quality[kind.metric_name]))

    def rank_instance(self, kind: TargetKind, q: int) -> int:
        """Index of the instance with the q-th smallest quality (1-based)."""
        if not 1 <= q <= self.n:
            raise ParameterError(f"rank {q} out of range 1..{self.n}")
        order = np.argsort(self.quality[kind.metric_name], kind="stable")
        return int(order[q - 1])

    def stats(self, metric: str) -> EnsembleStats:
        return EnsembleStats.from_values(self.quality[metric])


def _instance_metrics(net, kinds: Sequence[TargetKind]) -> dict[str, float]:
    out: dict[str, float] = {}
    for kind in kinds:
        if kind is TargetKind.DISTANCE:
            out[kind.metric_name] = measure(net).average_distance
        elif kind is TargetKind.GREEDY_NAV:
            out[kind.metric_name] = average_navigation_length(net, GREEDY)
        else:
            out[kind.metric_name] = average_navigation_length(net, TWO_LEVEL)
    return out


def evaluate_grid(
    grid: Sequence[GeneratorSpec],
    kinds: Sequence[TargetKind],
    n_instances: int,
    master_seed: int,
) -> list[GridPointEval]:
    """Evaluate quality metrics and realized cost for every grid point.

    Stochastic points get ``n_instances`` seeded instances (instance ``k``
    seeded from ``(master_seed, k)``); deterministic points are evaluated
    once.  Points whose construction fails are logged and dropped.
    """
    if not grid:
        raise ParameterError("parameter grid is empty")
    if n_instances < 1:
        raise ParameterError("ensemble size must be >= 1")
    evals: list[GridPointEval] = []
    for spec in grid:
        template = as_template(spec)
        n = n_instances if template.is_stochastic else 1
        costs: list[float] = []
        quality: dict[str, list[float]] = {k.metric_name: [] for k in kinds}
        try:
            for k in range(n):
                net = template.build_instance(master_seed, k)
                costs.append(wiring_cost(net).unit_cost)
                for name, value in _instance_metrics(net, kinds).items():
                    quality[name].append(value)
        except Exception as exc:
            logger.warning("grid point %s failed and was skipped: %s", template.label(), exc)
            continue
        evals.append(
            GridPointEval(
                spec=template,
                cost=tuple(costs),
                quality={name: tuple(vals) for name, vals in quality.items()},
            )
        )
    if not evals:
        raise ParameterError("every grid point failed to build")
    return evals


@dataclass(frozen=True)
class FrontierPoint:
    """Winner of the target minimization at one quality weight."""

    w: float
    spec: GeneratorSpec
    target_value: float
    quality: float
    cost: float


def _minimize(
    evals: Sequence[GridPointEval],
    kind: TargetKind,
    w_list: Sequence[float],
    point_values,
) -> list[FrontierPoint]:
    """Pick the argmin grid point per weight; ties go to grid order."""
    if not w_list:
        raise ParameterError("weight list is empty")
    pairs = [point_values(ev) for ev in evals]
    frontier = []
    for w in w_list:
        best_idx = None
        best_val = None
        for idx, (quality, cost) in enumerate(pairs):
            val = target_function(kind, w, quality, cost)
            if best_val is None or val < best_val:
                best_idx, best_val = idx, val
        quality, cost = pairs[best_idx]
        frontier.append(
            FrontierPoint(
                w=float(w),
                spec=evals[best_idx].spec,
                target_value=best_val,
                quality=quality,
                cost=cost,
            )
        )
    return frontier


def sweep_minimize(
    grid: Sequence[GeneratorSpec],
    kind: TargetKind,
    w_list: Sequence[float],
    n_instances: int,
    master_seed: int,
) -> list[FrontierPoint]:
    """Minimize the ensemble-mean target over the grid for every weight."""
    evals = evaluate_grid(grid, (kind,), n_instances, master_seed)
    return _minimize(
        evals, kind, w_list, lambda ev: (ev.mean_quality(kind), ev.mean_cost())
    )


def percentile_frontier(
    grid: Sequence[GeneratorSpec],
    kind: TargetKind,
    w_list: Sequence[float],
    n: int,
    q: int,
    master_seed: int,
) -> list[FrontierPoint]:
    """Frontier built from each grid point's rank-``q`` instance by quality.

    Quality and cost both come from that single instance, so the frontier
    reflects picking a lucky draw rather than the ensemble mean.
    """
    if not 1 <= q <= n:
        raise ParameterError(f"rank {q} out of range 1..{n}")
    evals = evaluate_grid(grid, (kind,), n, master_seed)

    def point_values(ev: GridPointEval) -> tuple[float, float]:
        idx = ev.rank_instance(kind, min(q, ev.n))
        return ev.quality[kind.metric_name][idx], ev.cost[idx]

    return _minimize(evals, kind, w_list, point_values)


@dataclass(frozen=True)
class ComparisonRow:
    """Targets of every family at one weight, plus the winner."""

    w: float
    winner: str
    targets: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class ComparisonTable:
    """Per-weight winners and the fraction of weights each family wins."""

    rows: tuple[ComparisonRow, ...]
    dominance: tuple[tuple[str, float], ...]


def compare_families(frontiers: Mapping[str, Sequence[FrontierPoint]]) -> ComparisonTable:
    """Compare named frontiers sharing one weight grid.

    The winner at each weight is the family with the smallest minimized
    target (ties to the lexicographically first name).
    """
    if len(frontiers) < 2:
        raise ParameterError("need at least two frontiers to compare")
    names = sorted(frontiers)
    w_ref = [p.w for p in frontiers[names[0]]]
    for name in names[1:]:
        w_here = [p.w for p in frontiers[name]]
        if len(w_here) != len(w_ref) or any(
            abs(a - b) > 1e-12 for a, b in zip(w_here, w_ref)
        ):
            raise ParameterError(f"frontier {name!r} uses a different weight grid")
    rows = []
    wins = {name: 0 for name in names}
    for idx, w in enumerate(w_ref):
        targets = tuple((name, frontiers[name][idx].target_value) for name in names)
        winner = min(targets, key=lambda item: (item[1], item[0]))[0]
        wins[winner] += 1
        rows.append(ComparisonRow(w=w, winner=winner, targets=targets))
    dominance = tuple((name, wins[name] / len(w_ref)) for name in names)
    return ComparisonTable(rows=tuple(rows), dominance=dominance)
