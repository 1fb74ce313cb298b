"""Local navigation: one-level greedy and two-level (neighbors of neighbors).

Both policies route by ring coordinates only.  Greedy always moves to the
neighbor closest to the destination on the ring.  The two-level policy
scores two-hop subpaths ``(w, e)`` by the ring distance of the endpoint
``e`` and, in the default ``rehop`` mode, advances a single hop to ``w``
and re-decides there; ``commit`` mode walks both hops of the chosen
subpath before re-deciding.  Ties always resolve to the smaller
intermediate label, then the smaller endpoint label, so paths are fully
deterministic.
"""

from dataclasses import dataclass

from . import _kernels
from .network import Network, NodeRangeError, lattice_distance

TWO_LEVEL_MODES = ("rehop", "commit")

#: Defensive ceiling on walk length; both policies provably terminate in
#: L/2 + 2 hops, so hitting this indicates a broken policy implementation.
HOP_CAP_FACTOR = 4

__all__ = [
    "TWO_LEVEL_MODES",
    "HOP_CAP_FACTOR",
    "NavigationLimitError",
    "NavPolicy",
    "NavResult",
    "navigate",
    "navigate_greedy",
    "navigate_two_level",
    "average_navigation_length",
    "navigation_histogram",
    "ensemble_navigation",
]


class NavigationLimitError(RuntimeError):
    """A walk exceeded the defensive hop cap (should never happen)."""


@dataclass(frozen=True)
class NavPolicy:
    """Navigation policy: search depth 1 (greedy) or 2, plus two-level mode."""

    depth: int = 1
    two_level_mode: str = "rehop"

    def __post_init__(self) -> None:
        if self.depth not in (1, 2):
            raise ValueError(f"navigation depth must be 1 or 2, got {self.depth}")
        if self.two_level_mode not in TWO_LEVEL_MODES:
            raise ValueError(
                f"two-level mode must be one of {TWO_LEVEL_MODES}, got {self.two_level_mode!r}"
            )


GREEDY = NavPolicy(depth=1)
TWO_LEVEL = NavPolicy(depth=2)


@dataclass(frozen=True)
class NavResult:
    """Hop count of one walk, with the visited node sequence if captured."""

    hops: int
    path: tuple[int, ...] | None = None


def _check_pair(net: Network, s: int, t: int) -> None:
    for label in (s, t):
        if not (0 <= label < net.L):
            raise NodeRangeError(f"node {label} out of range 0..{net.L - 1}")


def navigate_greedy(net: Network, s: int, t: int, capture_path: bool = False) -> NavResult:
    """Walk from ``s`` to ``t`` via the ring-closest neighbor at each step."""
    _check_pair(net, s, t)
    L = net.L
    cap = HOP_CAP_FACTOR * L
    cur = s
    hops = 0
    path = [s] if capture_path else None
    while cur != t:
        if hops >= cap:
            raise NavigationLimitError(f"greedy walk exceeded {cap} hops")
        best = None
        for e in net.neighbors(cur):
            e = int(e)
            key = (lattice_distance(L, e, t), e)
            if best is None or key < best:
                best = key
        cur = best[1]
        hops += 1
        if path is not None:
            path.append(cur)
    return NavResult(hops=hops, path=tuple(path) if path is not None else None)


def navigate_two_level(
    net: Network,
    s: int,
    t: int,
    mode: str = "rehop",
    capture_path: bool = False,
) -> NavResult:
    """Walk from ``s`` to ``t`` choosing moves by neighbors of neighbors.

    If ``t`` is adjacent to the current node the walk takes that edge.
    Otherwise the best two-hop subpath ``(w, e)`` with ``e != current`` is
    chosen by minimal ``(ring distance of e to t, w, e)``; ``rehop`` then
    advances only to ``w`` while ``commit`` advances through ``w`` to ``e``.
    """
    if mode not in TWO_LEVEL_MODES:
        raise ValueError(f"two-level mode must be one of {TWO_LEVEL_MODES}, got {mode!r}")
    _check_pair(net, s, t)
    L = net.L
    cap = HOP_CAP_FACTOR * L
    cur = s
    hops = 0
    path = [s] if capture_path else None
    while cur != t:
        if hops >= cap:
            raise NavigationLimitError(f"two-level walk exceeded {cap} hops")
        nbrs = [int(v) for v in net.neighbors(cur)]
        if t in nbrs:
            cur = t
            hops += 1
            if path is not None:
                path.append(t)
            continue
        best = None
        for w in nbrs:
            for e in net.neighbors(w):
                e = int(e)
                if e == cur:
                    continue
                key = (lattice_distance(L, e, t), w, e)
                if best is None or key < best:
                    best = key
        _, w, e = best
        if mode == "commit":
            cur = e
            hops += 2
            if path is not None:
                path.extend((w, e))
        else:
            cur = w
            hops += 1
            if path is not None:
                path.append(w)
    return NavResult(hops=hops, path=tuple(path) if path is not None else None)


def navigate(net: Network, s: int, t: int, policy: NavPolicy, capture_path: bool = False) -> NavResult:
    """Dispatch a single walk according to ``policy``."""
    if policy.depth == 1:
        return navigate_greedy(net, s, t, capture_path=capture_path)
    return navigate_two_level(net, s, t, mode=policy.two_level_mode, capture_path=capture_path)


def average_navigation_length(net: Network, policy: NavPolicy = GREEDY) -> float:
    """Mean walk length over all ordered pairs ``s != t`` (exact)."""
    indptr, indices = net.adjacency()
    if policy.depth == 1:
        total = _kernels.greedy_total(indptr, indices, net.L)
    else:
        commit = policy.two_level_mode == "commit"
        total = _kernels.two_level_total(indptr, indices, net.L, commit)
    return int(total) / (net.L * (net.L - 1))


def navigation_histogram(net: Network, policy: NavPolicy = GREEDY) -> dict[int, int]:
    """Walk-length histogram over all ordered pairs, as {hops: pair count}."""
    indptr, indices = net.adjacency()
    if policy.depth == 1:
        hist = _kernels.greedy_histogram(indptr, indices, net.L)
    else:
        commit = policy.two_level_mode == "commit"
        hist = _kernels.two_level_histogram(indptr, indices, net.L, commit)
    return {int(h): int(c) for h, c in enumerate(hist) if c > 0}


def ensemble_navigation(spec, policy: NavPolicy, n: int, master_seed: int):
    """Average navigation length of ``n`` seeded instances of a generator."""
    from .families import as_template
    from .metrics import EnsembleStats

    template = as_template(spec)
    if n < 1:
        raise ValueError("ensemble size must be >= 1")
    values = []
    for k in range(n):
        try:
            net = template.build_instance(master_seed, k)
        except Exception as exc:
            raise type(exc)(f"instance {k}: {exc}") from exc
        values.append(average_navigation_length(net, policy))
    return EnsembleStats.from_values(values)
