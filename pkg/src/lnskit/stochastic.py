"""Seeded stochastic constructions: per-node attachment (s1), fixed count
(s1m), and fixed count with forcibly conjoined shortcuts (s2).

Shortcut targets are drawn by lattice distance ``r`` with probability
proportional to ``(nodes at distance r) * r**-alpha`` over the admissible
range ``2..L//2``, then a uniform side, which is equivalent to weighting
each admissible node by ``r**-alpha``.  All draws come from a single
``numpy`` generator per construction, so a seed pins the network exactly.
"""

from dataclasses import dataclass

import numpy as np

from .network import Network

#: Resampling budget per shortcut before declaring the draw saturated.
RETRY_FACTOR = 100

__all__ = [
    "RETRY_FACTOR",
    "ParameterError",
    "SaturationError",
    "PowerLawSampler",
    "StochasticSpec",
    "sample_shortcut_end",
    "construct_s1",
    "construct_s1m",
    "construct_s2",
]


class ParameterError(ValueError):
    """Generator parameters violate their constraints."""


class SaturationError(RuntimeError):
    """No admissible shortcut target found within the retry budget."""


def _rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


class PowerLawSampler:
    """Distance-first sampler over admissible shortcut lengths.

    Precomputes the cumulative weight table over ``r in 2..L//2`` with
    weight ``multiplicity(r) * r**-alpha`` (multiplicity 2 except for the
    single antipodal node when ``L`` is even and ``r == L/2``).
    """

    def __init__(self, L: int, alpha: float):
        if L < 4:
            raise ParameterError(f"no admissible shortcut distances for L={L}")
        if alpha < 0:
            raise ParameterError(f"alpha must be >= 0, got {alpha}")
        self.L = L
        self.alpha = float(alpha)
        r = np.arange(2, L // 2 + 1, dtype=np.float64)
        multiplicity = np.full(len(r), 2.0)
        if L % 2 == 0:
            multiplicity[-1] = 1.0
        weights = multiplicity * r ** (-self.alpha)
        self._distances = r.astype(np.int64)
        self._cumulative = np.cumsum(weights)
        self._total = float(self._cumulative[-1])

    def probabilities(self) -> dict[int, float]:
        """Probability of each admissible distance (both sides combined)."""
        weights = np.diff(self._cumulative, prepend=0.0)
        return {int(r): float(w / self._total) for r, w in zip(self._distances, weights)}

    def sample_distance(self, rng: np.random.Generator) -> int:
        u = rng.random() * self._total
        idx = int(np.searchsorted(self._cumulative, u, side="right"))
        idx = min(idx, len(self._distances) - 1)
        return int(self._distances[idx])

    def sample_target(self, first: int, rng: np.random.Generator) -> int:
        """Draw the second end for a shortcut anchored at ``first``."""
        r = self.sample_distance(rng)
        if 2 * r == self.L:
            return (first + r) % self.L
        side = 1 if rng.integers(2) == 0 else -1
        return (first + side * r) % self.L


def _sample_partner(
    first: int,
    sampler: PowerLawSampler,
    pairs: set[tuple[int, int]],
    rng: np.random.Generator,
) -> int:
    """Resample until the drawn pair is new; bounded by the retry budget."""
    attempts = RETRY_FACTOR * sampler.L
    for _ in range(attempts):
        j = sampler.sample_target(first, rng)
        pair = (first, j) if first < j else (j, first)
        if pair not in pairs:
            return j
    raise SaturationError(
        f"no admissible shortcut target for node {first} after {attempts} attempts"
    )


def sample_shortcut_end(
    first: int, sampler: PowerLawSampler, net: Network, rng: np.random.Generator
) -> int:
    """Second shortcut end for ``first``: lattice distance >= 2, not already
    a shortcut of ``net``, drawn with per-node weight ``r**-alpha``."""
    if not (0 <= first < net.L):
        raise ParameterError(f"node {first} out of range 0..{net.L - 1}")
    if sampler.L != net.L:
        raise ParameterError("sampler and network sizes differ")
    return _sample_partner(first, sampler, set(net.shortcuts), rng)


def construct_s1(L: int, p: float, alpha: float, seed: int) -> Network:
    """Visit nodes in label order; each starts a shortcut with probability p."""
    if not 0 < p <= 1:
        raise ParameterError(f"attachment probability must be in (0, 1], got {p}")
    sampler = PowerLawSampler(L, alpha)
    rng = _rng_from_seed(seed)
    pairs: set[tuple[int, int]] = set()
    for i in range(L):
        if rng.random() < p:
            j = _sample_partner(i, sampler, pairs, rng)
            pairs.add((i, j) if i < j else (j, i))
    return Network(L, tuple(pairs))


def _draw_firsts(L: int, count: int, rng: np.random.Generator) -> list[int]:
    return [int(v) for v in rng.choice(L, size=count, replace=False)]


def construct_s1m(L: int, t: int, alpha: float, seed: int) -> Network:
    """Exactly ``t`` shortcuts anchored at ``t`` distinct random nodes."""
    if not 1 <= t <= L:
        raise ParameterError(f"shortcut count must be in 1..L={L}, got {t}")
    sampler = PowerLawSampler(L, alpha)
    rng = _rng_from_seed(seed)
    pairs: set[tuple[int, int]] = set()
    for i in _draw_firsts(L, t, rng):
        j = _sample_partner(i, sampler, pairs, rng)
        pairs.add((i, j) if i < j else (j, i))
    return Network(L, tuple(pairs))


def construct_s2(L: int, t: int, c: int, alpha: float, seed: int) -> Network:
    """As s1m for the first ``t - c`` shortcuts; the remaining ``c`` are
    anchored at nodes that already carry a shortcut end.

    The anchor for each conjoined shortcut is drawn uniformly from the
    deduplicated list of end-bearing nodes (kept in first-touch order),
    refreshed after every addition.  With ``c == 0`` the construction
    consumes randomness exactly like s1m, so equal seeds give equal
    networks.
    """
    if not 1 <= t <= L:
        raise ParameterError(f"shortcut count must be in 1..L={L}, got {t}")
    if not 0 <= c < t:
        raise ParameterError(f"conjoined count must satisfy 0 <= c < t={t}, got {c}")
    sampler = PowerLawSampler(L, alpha)
    rng = _rng_from_seed(seed)
    pairs: set[tuple[int, int]] = set()
    endpoints: list[int] = []  # deduplicated, first-touch order
    seen: set[int] = set()

    def note_endpoint(v: int) -> None:
        if v not in seen:
            seen.add(v)
            endpoints.append(v)

    for i in _draw_firsts(L, t - c, rng):
        j = _sample_partner(i, sampler, pairs, rng)
        pairs.add((i, j) if i < j else (j, i))
        note_endpoint(i)
        note_endpoint(j)
    for _ in range(c):
        i = endpoints[int(rng.integers(len(endpoints)))]
        j = _sample_partner(i, sampler, pairs, rng)
        pairs.add((i, j) if i < j else (j, i))
        note_endpoint(j)
    return Network(L, tuple(pairs))


_FAMILY_PARAMS = {
    "s1": ("p", "alpha"),
    "s1m": ("t", "alpha"),
    "s2": ("t", "c", "alpha"),
}


@dataclass(frozen=True)
class StochasticSpec:
    """Parameter record for one stochastic family, optionally with a seed."""

    family: str
    L: int
    alpha: float
    p: float | None = None
    t: int | None = None
    c: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_PARAMS:
            raise ParameterError(f"unknown stochastic family {self.family!r}")
        required = _FAMILY_PARAMS[self.family]
        for name in ("p", "t", "c"):
            value = getattr(self, name)
            if name in required and value is None:
                raise ParameterError(f"family {self.family!r} requires parameter {name!r}")
            if name not in required and value is not None:
                raise ParameterError(f"family {self.family!r} does not take parameter {name!r}")

    def build(self, seed: int | None = None) -> Network:
        use = seed if seed is not None else self.seed
        if use is None:
            raise ParameterError("no seed given for stochastic construction")
        if self.family == "s1":
            return construct_s1(self.L, self.p, self.alpha, use)
        if self.family == "s1m":
            return construct_s1m(self.L, self.t, self.alpha, use)
        return construct_s2(self.L, self.t, self.c, self.alpha, use)
