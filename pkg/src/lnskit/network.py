"""Ring lattice with shortcut edges: the core network value type.

A network is an immutable ring of ``L`` nodes (labels ``0..L-1``, edges
``{i, i+1 mod L}``) plus a set of shortcut edges between non-adjacent
nodes.  Shortcut length is measured in ring hops, and the total shortcut
length per node is the wiring cost used throughout the toolkit.
"""

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

MIN_NODES = 3

__all__ = [
    "MIN_NODES",
    "NetworkError",
    "InvalidSizeError",
    "NodeRangeError",
    "SelfLoopError",
    "RingEdgeError",
    "DuplicateShortcutError",
    "EncodingError",
    "Network",
    "ShortcutLengthSummary",
    "lattice_distance",
    "new_ring",
    "add_shortcut",
    "wiring_cost",
    "encode_network",
    "decode_network",
]


class NetworkError(ValueError):
    """Base class for invalid network construction or queries."""


class InvalidSizeError(NetworkError):
    """Node count below the minimum of three."""


class NodeRangeError(NetworkError):
    """Node label outside ``0..L-1``."""


class SelfLoopError(NetworkError):
    """Shortcut with both ends on the same node."""


class RingEdgeError(NetworkError):
    """Shortcut that would duplicate a ring edge (lattice distance < 2)."""


class DuplicateShortcutError(NetworkError):
    """Shortcut already present."""


class EncodingError(NetworkError):
    """Malformed serialized network."""


def lattice_distance(L: int, i: int, j: int) -> int:
    """Ring-hop distance between two node labels: ``min(|i-j|, L-|i-j|)``."""
    if L < MIN_NODES:
        raise InvalidSizeError(f"node count must be >= {MIN_NODES}, got {L}")
    if not (0 <= i < L):
        raise NodeRangeError(f"node {i} out of range 0..{L - 1}")
    if not (0 <= j < L):
        raise NodeRangeError(f"node {j} out of range 0..{L - 1}")
    d = abs(i - j)
    return min(d, L - d)


def _canonical_pair(L: int, i: int, j: int) -> tuple[int, int]:
    """Validate a shortcut pair and return it as (low, high)."""
    r = lattice_distance(L, i, j)
    if r == 0:
        raise SelfLoopError(f"shortcut ({i}, {j}) is a self-loop")
    if r < 2:
        raise RingEdgeError(f"shortcut ({i}, {j}) duplicates a ring edge")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class ShortcutLengthSummary:
    """Total shortcut length (ring-hop units) and its per-node share."""

    total_length: int
    unit_cost: float


@dataclass(frozen=True)
class Network:
    """Immutable ring lattice of ``L`` nodes plus a canonical shortcut set.

    ``shortcuts`` is stored as a sorted tuple of ``(low, high)`` pairs so
    iteration order is deterministic.  Construction validates every pair:
    no self-loops, no ring-edge duplicates, no repeated pairs.
    """

    L: int
    shortcuts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.L, int):
            raise InvalidSizeError(f"node count must be an integer, got {self.L!r}")
        if self.L < MIN_NODES:
            raise InvalidSizeError(f"node count must be >= {MIN_NODES}, got {self.L}")
        seen: set[tuple[int, int]] = set()
        canonical = []
        for pair in self.shortcuts:
            i, j = pair
            key = _canonical_pair(self.L, int(i), int(j))
            if key in seen:
                raise DuplicateShortcutError(f"shortcut {key} appears more than once")
            seen.add(key)
            canonical.append(key)
        canonical.sort()
        object.__setattr__(self, "shortcuts", tuple(canonical))

    @property
    def shortcut_count(self) -> int:
        return len(self.shortcuts)

    @cached_property
    def _shortcut_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.shortcuts)

    @cached_property
    def _csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices), neighbor lists sorted."""
        L = self.L
        ring = np.arange(L, dtype=np.int64)
        heads = [ring, (ring + 1) % L]
        tails = [(ring + 1) % L, ring]
        if self.shortcuts:
            sc = np.asarray(self.shortcuts, dtype=np.int64)
            heads += [sc[:, 0], sc[:, 1]]
            tails += [sc[:, 1], sc[:, 0]]
        src = np.concatenate(heads)
        dst = np.concatenate(tails)
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(L + 1, dtype=np.int32)
        np.cumsum(np.bincount(src, minlength=L), out=indptr[1:])
        return indptr, dst.astype(np.int32)

    def adjacency(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR adjacency arrays ``(indptr, indices)`` shared read-only."""
        return self._csr

    def neighbors(self, i: int) -> np.ndarray:
        """Sorted neighbor labels of node ``i`` (ring plus shortcuts)."""
        if not (0 <= i < self.L):
            raise NodeRangeError(f"node {i} out of range 0..{self.L - 1}")
        indptr, indices = self._csr
        return indices[indptr[i] : indptr[i + 1]]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def has_shortcut(self, i: int, j: int) -> bool:
        pair = (i, j) if i < j else (j, i)
        return pair in self._shortcut_set

    def has_edge(self, i: int, j: int) -> bool:
        return lattice_distance(self.L, i, j) == 1 or self.has_shortcut(i, j)


def new_ring(L: int) -> Network:
    """A plain ring of ``L`` nodes with no shortcuts."""
    return Network(L)


def add_shortcut(net: Network, i: int, j: int) -> Network:
    """Return a new network with shortcut ``{i, j}`` added.

    Rejects self-loops, ring-edge duplicates and already-present shortcuts,
    each with its own error type.
    """
    key = _canonical_pair(net.L, i, j)
    if key in net._shortcut_set:
        raise DuplicateShortcutError(f"shortcut {key} already present")
    return Network(net.L, net.shortcuts + (key,))


def wiring_cost(net: Network) -> ShortcutLengthSummary:
    """Sum of lattice distances over all shortcuts, and that sum per node."""
    total = sum(lattice_distance(net.L, i, j) for i, j in net.shortcuts)
    return ShortcutLengthSummary(total_length=total, unit_cost=total / net.L)


def encode_network(net: Network) -> bytes:
    """Canonical JSON encoding: ``{"L": <int>, "shortcuts": [[i, j], ...]}``.

    Pairs are emitted in ascending order with ``i < j``; a ring of 5 nodes
    encodes to ``b'{"L":5,"shortcuts":[]}'``.
    """
    payload = {"L": net.L, "shortcuts": [list(p) for p in net.shortcuts]}
    return json.dumps(payload, separators=(",", ":")).encode("ascii")


def decode_network(data: bytes | str) -> Network:
    """Parse a serialized network, enforcing every structural invariant."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise EncodingError(f"invalid network JSON at position {exc.pos}: {exc.msg}") from exc
    if not isinstance(payload, dict):
        raise EncodingError("network JSON must be an object with 'L' and 'shortcuts'")
    missing = {"L", "shortcuts"} - payload.keys()
    if missing:
        raise EncodingError(f"network JSON missing keys: {sorted(missing)}")
    L = payload["L"]
    raw = payload["shortcuts"]
    if not isinstance(L, int) or isinstance(L, bool):
        raise EncodingError(f"'L' must be an integer, got {L!r}")
    if not isinstance(raw, list):
        raise EncodingError("'shortcuts' must be a list of pairs")
    pairs = []
    for idx, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise EncodingError(f"shortcut #{idx} must be a pair of integers, got {item!r}")
        pairs.append((item[0], item[1]))
    return Network(L, tuple(pairs))
