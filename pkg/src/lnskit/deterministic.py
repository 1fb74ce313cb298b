"""Deterministic constructions: farthest-pair insertion (d1), the
power-of-two hierarchy (d2), multiplicative circulants, hub networks (d3),
and the subcirculant hierarchies (d4s, d4), plus their closed-form
diameter and distance bounds.

Every construction is a pure function of its parameters; identical inputs
give identical networks.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .network import Network, lattice_distance
from .stochastic import ParameterError

__all__ = [
    "D4Spec",
    "Star",
    "DoubleLoop",
    "HubGraphKind",
    "construct_d1",
    "construct_d2",
    "construct_circulant",
    "multiplicative_steps",
    "construct_multiplicative_circulant",
    "circulant_diameter_formula",
    "construct_d3",
    "d3_diameter_bound",
    "hub_graph_diameter",
    "star_diameter",
    "double_loop_diameter_formula",
    "construct_d4s",
    "construct_d4",
    "d4_distance_bound",
    "d4s_distance_bound",
]


class _EdgeSet:
    """Shortcut accumulator that silently drops self-loops, ring edges and
    duplicates (cycle closures over tiny node sets produce all three)."""

    def __init__(self, L: int):
        self.L = L
        self.pairs: set[tuple[int, int]] = set()
        self.touched = np.zeros(L, dtype=bool)

    def add(self, i: int, j: int) -> None:
        i %= self.L
        j %= self.L
        if i == j or lattice_distance(self.L, i, j) < 2:
            return
        pair = (i, j) if i < j else (j, i)
        if pair in self.pairs:
            return
        self.pairs.add(pair)
        self.touched[i] = True
        self.touched[j] = True

    def add_cycle(self, members: list[int]) -> None:
        m = len(members)
        if m < 2:
            return
        # two members form a single edge, not a doubled one
        last = m if m > 2 else m - 1
        for idx in range(last):
            self.add(members[idx], members[(idx + 1) % m])

    def network(self) -> Network:
        return Network(self.L, tuple(self.pairs))


def construct_d1(L: int, t: int) -> Network:
    """Add ``t`` shortcuts greedily between currently most distant nodes.

    Each iteration recomputes all-pairs distances on the network built so
    far, then joins a pair at maximal graph distance, breaking ties by
    minimal lattice distance and then by smallest (i, j).
    """
    if t < 1:
        raise ParameterError(f"shortcut count must be >= 1, got {t}")
    edges = _EdgeSet(L)
    net = edges.network()
    for _ in range(t):
        indptr, indices = net.adjacency()
        i, j, graph_dist = _kernels.max_distance_pair(indptr, indices, L)
        if graph_dist < 2:
            raise ParameterError(f"network is complete after {len(edges.pairs)} shortcuts")
        edges.add(int(i), int(j))
        net = edges.network()
    return net


def construct_d2(L: int) -> Network:
    """Power-of-two hierarchy on ``L = 2**k`` nodes.

    Writing 1-based labels as ``n = 2**i * (2j + 1)``, every hierarchy
    level ``i`` connects its consecutive members (spacing ``2**(i+1)``) in
    a cycle; the two top members end up joined by a single half-ring
    shortcut.  Labels are shifted down by one to the 0-based ring.  Total
    shortcut length per node is exactly ``k - 3/2``.
    """
    k = L.bit_length() - 1
    if L < 8 or (1 << k) != L:
        raise ParameterError(f"node count must be a power of two >= 8, got {L}")
    edges = _EdgeSet(L)
    for i in range(k - 1):
        members = [(2**i * (2 * j + 1) - 1) % L for j in range(2 ** (k - i - 1))]
        edges.add_cycle(members)
    return edges.network()


def construct_circulant(L: int, steps) -> Network:
    """Ring plus chords: node ``i`` joined to ``i +- step`` for every step.

    Step 1 denotes the ring itself and adds nothing.  Steps must be
    distinct integers in ``1..L//2``.
    """
    seen = set()
    for step in steps:
        if not isinstance(step, (int, np.integer)):
            raise ParameterError(f"steps must be integers, got {step!r}")
        if not 1 <= step <= L // 2:
            raise ParameterError(f"step {step} out of range 1..{L // 2}")
        if step in seen:
            raise ParameterError(f"step {step} repeated")
        seen.add(int(step))
    edges = _EdgeSet(L)
    for step in sorted(seen):
        if step == 1:
            continue
        for i in range(L):
            edges.add(i, (i + step) % L)
    return edges.network()


def multiplicative_steps(s: int, k: int) -> tuple[int, ...]:
    """Chord lengths ``1, s, s**2, ..., s**(k-1)`` for an ``s**k``-node ring."""
    if s < 2:
        raise ParameterError(f"base must be >= 2, got {s}")
    if k < 1:
        raise ParameterError(f"depth must be >= 1, got {k}")
    return tuple(s**i for i in range(k))


def construct_multiplicative_circulant(s: int, k: int) -> Network:
    """Circulant on ``s**k`` nodes with chords at every power of ``s``."""
    return construct_circulant(s**k, multiplicative_steps(s, k))


def circulant_diameter_formula(s: int, k: int) -> int:
    """Closed-form diameter of the multiplicative circulant."""
    if s < 2:
        raise ParameterError(f"base must be >= 2, got {s}")
    if k < 1:
        raise ParameterError(f"depth must be >= 1, got {k}")
    if s % 2 == 1:
        return k * (s // 2)
    return k * s // 2 - k // 2


@dataclass(frozen=True)
class Star:
    """Hub wiring: the first hub is joined to every other hub."""


@dataclass(frozen=True)
class DoubleLoop:
    """Hub wiring: hub u joined to hubs u +- a and u +- b (mod hub count)."""

    a: int
    b: int


HubGraphKind = Star | DoubleLoop


def _hub_edges(h: int, kind: HubGraphKind) -> list[tuple[int, int]]:
    """Edges of the hub graph on hub indices ``0..h-1``."""
    if isinstance(kind, Star):
        return [(0, u) for u in range(1, h)]
    if isinstance(kind, DoubleLoop):
        a, b = kind.a, kind.b
        for step in (a, b):
            if not 1 <= step <= h // 2:
                raise ParameterError(f"hub loop step {step} out of range 1..{h // 2}")
        if a == b:
            raise ParameterError("hub loop steps must differ")
        out = set()
        for u in range(h):
            for step in (a, b):
                v = (u + step) % h
                if u != v:
                    out.add((u, v) if u < v else (v, u))
        return sorted(out)
    raise ParameterError(f"unknown hub graph kind {kind!r}")


def hub_graph_diameter(h: int, kind: HubGraphKind) -> int:
    """BFS diameter of the hub graph alone (infinite if disconnected)."""
    if h < 1:
        raise ParameterError(f"hub count must be >= 1, got {h}")
    if h == 1:
        return 0
    adj: list[list[int]] = [[] for _ in range(h)]
    for u, v in _hub_edges(h, kind):
        adj[u].append(v)
        adj[v].append(u)
    worst = 0
    for src in range(h):
        dist = [-1] * h
        dist[src] = 0
        queue = [src]
        for cur in queue:
            for nxt in adj[cur]:
                if dist[nxt] < 0:
                    dist[nxt] = dist[cur] + 1
                    queue.append(nxt)
        if min(dist) < 0:
            raise ParameterError("hub graph is disconnected")
        worst = max(worst, max(dist))
    return worst


def star_diameter(h: int) -> int:
    """Diameter of the star hub graph on ``h`` hubs."""
    if h < 1:
        raise ParameterError(f"hub count must be >= 1, got {h}")
    return 0 if h == 1 else (1 if h == 2 else 2)


def double_loop_diameter_formula(h: int) -> int:
    """Best achievable double-loop diameter, ``ceil((-1 + sqrt(2h-1)) / 2)``."""
    if h < 1:
        raise ParameterError(f"hub count must be >= 1, got {h}")
    return math.ceil((-1.0 + math.sqrt(2.0 * h - 1.0)) / 2.0)


def construct_d3(
    L: int, K: int, h: int, hub_kind: HubGraphKind, equalize_degrees: bool = False
) -> Network:
    """Circulant base ``C(L; 1..K/2)`` plus ``h`` evenly placed hubs wired
    to each other according to ``hub_kind``.

    Hubs sit at ``floor(u * L / h)``.  Hub edges that coincide with base
    edges are skipped.  The degree-equalizing rewiring step is a reserved
    hook; no defined procedure exists for it yet.
    """
    if equalize_degrees:
        raise NotImplementedError("degree-equalizing reorganization has no defined procedure")
    if K < 2 or K % 2 != 0:
        raise ParameterError(f"base connectivity K must be even and >= 2, got {K}")
    if K // 2 > L // 2:
        raise ParameterError(f"base step K/2={K // 2} exceeds L//2={L // 2}")
    if not 1 <= h <= L:
        raise ParameterError(f"hub count must be in 1..L={L}, got {h}")
    edges = _EdgeSet(L)
    for step in range(2, K // 2 + 1):
        for i in range(L):
            edges.add(i, (i + step) % L)
    hubs = [u * L // h for u in range(h)]
    if h > 1:
        for u, v in _hub_edges(h, hub_kind):
            edges.add(hubs[u], hubs[v])
    return edges.network()


def d3_diameter_bound(L: int, h: int, K: int, hub_diameter: int) -> int:
    """Diameter bound: twice the hops from any node to its nearest hub plus
    the hub graph diameter, ``2*ceil((ceil(L/h) - 1)/K) + D_H``."""
    if min(L, h, K) < 1 or hub_diameter < 0:
        raise ParameterError("bound arguments must be positive")
    return 2 * math.ceil((math.ceil(L / h) - 1) / K) + hub_diameter


def construct_d4s(L: int, b: int, k: int) -> Network:
    """Aligned subcirculant on ``L = m * b**k`` nodes.

    For each level ``i = 1..k`` the nodes ``0, b**i, 2*b**i, ...`` are
    joined consecutively in a cycle; every cycle passes through node 0.
    Degenerate levels (one member) and doubled closures are skipped.
    """
    if b < 2:
        raise ParameterError(f"base must be >= 2, got {b}")
    if k < 1:
        raise ParameterError(f"depth must be >= 1, got {k}")
    if L % (b**k) != 0 or L // (b**k) < 1:
        raise ParameterError(f"node count {L} is not a multiple of b**k = {b**k}")
    edges = _EdgeSet(L)
    for i in range(1, k + 1):
        step = b**i
        edges.add_cycle(list(range(0, L, step)))
    return edges.network()


@dataclass(frozen=True)
class D4Spec:
    """Size and (base, depth) for the displaced subcirculant construction."""

    L: int
    b: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError(f"depth must be >= 1, got {self.k}")
        if not 2 < self.b <= self.L // 2:
            raise ParameterError(f"base must satisfy 2 < b <= L/2, got b={self.b}, L={self.L}")
        if not self.b**self.k + self.k < self.L:
            raise ParameterError(
                f"b**k + k must be < L, got {self.b}**{self.k} + {self.k} >= {self.L}"
            )
        if not self.k <= self.b**2:
            raise ParameterError(f"depth must satisfy k <= b**2, got k={self.k}, b={self.b}")


def construct_d4(spec: D4Spec) -> Network:
    """Displaced subcirculant: level cycles shifted to disjoint node sets.

    Level ``i`` (``i = 2..k``) joins nodes ``i, i + b**i, i + 2*b**i, ...``
    consecutively in a cycle.  The level-1 cycle then threads anchors
    ``1 + j*b``, displacing each to the nearest node (by absolute label
    difference, ties to the larger label, search radius ``b``) that carries
    no shortcut yet; the left member of any ring-adjacent chosen pair is
    dropped before the cycle is closed.
    """
    L, b, k = spec.L, spec.b, spec.k
    edges = _EdgeSet(L)
    for i in range(2, k + 1):
        step = b**i
        h_i = (L - i) // step
        edges.add_cycle([(i + j * step) % L for j in range(h_i + 1)])

    radius = b
    reserved: set[int] = set()
    chosen: list[int] = []
    h_1 = (L - 1) // b
    for j in range(h_1 + 1):
        anchor = (1 + j * b) % L
        picked = -1
        for delta in range(radius + 1):
            for q in ((anchor + delta, anchor - delta) if delta else (anchor,)):
                if 0 <= q < L and not edges.touched[q] and q not in reserved:
                    picked = q
                    break
            if picked >= 0:
                break
        if picked < 0:
            raise ParameterError(
                f"no shortcut-free node within {radius} labels of anchor {anchor}"
            )
        reserved.add(picked)
        chosen.append(picked)
    keep = [True] * len(chosen)
    for j in range(len(chosen) - 1):
        if chosen[j + 1] - chosen[j] == 1:
            keep[j] = False
    edges.add_cycle([q for q, flag in zip(chosen, keep) if flag])
    return edges.network()


def d4_distance_bound(L: int, b: int, k: int, lam: float = 1.0) -> float:
    """Distance estimate ``lam * (k*(b+4)/2 + L/(4*b**k) - 2)``."""
    if min(L, b, k) < 1:
        raise ParameterError("bound arguments must be positive")
    return lam * (k * (b + 4) / 2.0 + L / (4.0 * b**k) - 2.0)


def d4s_distance_bound(b: int, k: int, m: int, L: int) -> float:
    """Average-distance bound for the aligned subcirculant on ``L = m*b**k``."""
    if min(b, k, m) < 1 or L < 3:
        raise ParameterError("bound arguments must be positive")
    if L != m * b**k:
        raise ParameterError(f"node count {L} != m * b**k = {m * b**k}")
    tail = (m / 4.0) * (L / (L - 1.0))
    if b % 2 == 0:
        return b * k / 2.0 + tail
    return (b * b - 1.0) * k / (2.0 * b) + tail
