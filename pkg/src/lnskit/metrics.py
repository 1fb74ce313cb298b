"""Exact graph-distance measurements on single networks and seeded ensembles.

Averages are over ordered node pairs ``i != j`` and are computed from exact
integer hop sums (one BFS per source), so repeated runs agree to the last
bit.  ``EXACT_ALL_PAIRS_LIMIT`` guards the quadratic sweep; beyond it the
pair-sampling estimator is the intended tool.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .network import Network, NodeRangeError, wiring_cost

EXACT_ALL_PAIRS_LIMIT = 30_000

__all__ = [
    "EXACT_ALL_PAIRS_LIMIT",
    "MetricsReport",
    "EnsembleStats",
    "bfs_distances",
    "average_distance",
    "diameter",
    "measure",
    "estimate_average_distance",
    "ensemble_measure",
]


@dataclass(frozen=True)
class MetricsReport:
    """Per-instance measurements bundled for reporting."""

    node_count: int
    shortcut_count: int
    cost_per_node: float
    average_distance: float
    diameter: int

    def as_dict(self) -> dict[str, float | int]:
        return {
            "node_count": self.node_count,
            "shortcut_count": self.shortcut_count,
            "cost_per_node": self.cost_per_node,
            "average_distance": self.average_distance,
            "diameter": self.diameter,
        }


@dataclass(frozen=True)
class EnsembleStats:
    """Mean, spread and order statistics of one metric over an ensemble.

    ``values`` keeps the per-instance results in instance order; ``std`` is
    the population standard deviation (zero for a single instance).
    """

    values: tuple[float, ...]
    mean: float
    std: float
    min: float
    max: float

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_values(cls, values) -> "EnsembleStats":
        vals = tuple(float(v) for v in values)
        if not vals:
            raise ValueError("ensemble must contain at least one instance")
        arr = np.asarray(vals)
        return cls(
            values=vals,
            mean=float(arr.mean()),
            std=float(arr.std()),
            min=float(arr.min()),
            max=float(arr.max()),
        )

    def rank_value(self, q: int) -> float:
        """Nearest-rank order statistic: the q-th smallest value, 1-based."""
        if not 1 <= q <= self.n:
            raise ValueError(f"rank {q} out of range 1..{self.n}")
        return sorted(self.values)[q - 1]

    def standard_error(self) -> float:
        return self.std / math.sqrt(self.n)


def bfs_distances(net: Network, src: int) -> np.ndarray:
    """Exact hop distances from ``src`` to every node."""
    if not (0 <= src < net.L):
        raise NodeRangeError(f"node {src} out of range 0..{net.L - 1}")
    indptr, indices = net.adjacency()
    return np.asarray(_kernels.bfs_distances(indptr, indices, net.L, src))


def _distance_stats(net: Network) -> tuple[float, int]:
    indptr, indices = net.adjacency()
    total, diam = _kernels.all_pairs_distance_stats(indptr, indices, net.L)
    return int(total) / (net.L * (net.L - 1)), int(diam)


def average_distance(net: Network) -> float:
    """Mean hop distance over all ordered pairs ``i != j`` (exact)."""
    return _distance_stats(net)[0]


def diameter(net: Network) -> int:
    """Largest hop distance between any two nodes."""
    return _distance_stats(net)[1]


def measure(net: Network) -> MetricsReport:
    """Average distance, diameter, wiring cost and counts for one network."""
    d, diam = _distance_stats(net)
    cost = wiring_cost(net)
    return MetricsReport(
        node_count=net.L,
        shortcut_count=net.shortcut_count,
        cost_per_node=cost.unit_cost,
        average_distance=d,
        diameter=diam,
    )


def estimate_average_distance(
    net: Network, n_pairs: int, seed: int
) -> tuple[float, float]:
    """Sampled mean distance over uniform random ordered pairs.

    Returns ``(estimate, standard_error)``.  Intended for networks beyond
    ``EXACT_ALL_PAIRS_LIMIT`` where the exact sweep is too slow.
    """
    if n_pairs < 2:
        raise ValueError("need at least two sampled pairs")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    sources = rng.integers(0, net.L, size=n_pairs, dtype=np.int32)
    offsets = rng.integers(1, net.L, size=n_pairs, dtype=np.int64)
    targets = ((sources + offsets) % net.L).astype(np.int32)
    order = np.argsort(sources, kind="stable")
    sources, targets = sources[order], targets[order]

    # one BFS per distinct sampled source; exact integer sums, float spread
    total = 0
    sq_total = 0.0
    start = 0
    samples = np.empty(n_pairs, np.float64)
    while start < n_pairs:
        stop = start
        while stop < n_pairs and sources[stop] == sources[start]:
            stop += 1
        dist = bfs_distances(net, int(sources[start]))
        chunk = dist[targets[start:stop]]
        total += int(chunk.sum(dtype=np.int64))
        samples[start:stop] = chunk
        start = stop
    mean = total / n_pairs
    sq_total = float(((samples - mean) ** 2).sum())
    se = math.sqrt(sq_total / (n_pairs - 1)) / math.sqrt(n_pairs)
    return mean, se


def ensemble_measure(spec, n: int, master_seed: int) -> dict[str, EnsembleStats]:
    """Measure ``n`` seeded instances of a generator spec.

    Returns one ``EnsembleStats`` per metric name.  Instance ``k`` is built
    with the seed derived from ``(master_seed, k)``, so results do not
    depend on evaluation order.
    """
    from .families import as_template

    template = as_template(spec)
    if n < 1:
        raise ValueError("ensemble size must be >= 1")
    records: dict[str, list[float]] = {
        "average_distance": [],
        "diameter": [],
        "cost_per_node": [],
        "shortcut_count": [],
    }
    for k in range(n):
        try:
            net = template.build_instance(master_seed, k)
        except Exception as exc:
            raise type(exc)(f"instance {k}: {exc}") from exc
        report = measure(net)
        records["average_distance"].append(report.average_distance)
        records["diameter"].append(report.diameter)
        records["cost_per_node"].append(report.cost_per_node)
        records["shortcut_count"].append(report.shortcut_count)
    return {name: EnsembleStats.from_values(vals) for name, vals in records.items()}
