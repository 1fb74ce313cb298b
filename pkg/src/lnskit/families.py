"""Generator registry: one name per construction family, with parameter
validation, seeded instance building, and reproducible ensemble seeding.

Instance ``k`` of an ensemble always uses the seed derived from
``(master_seed, k)``, independent of the family or evaluation order, so
ensembles are reproducible and different families can be compared on
common random numbers.
"""

from dataclasses import dataclass

import numpy as np

from . import deterministic, stochastic
from .network import Network, new_ring
from .stochastic import ParameterError

__all__ = [
    "FAMILY_NAMES",
    "STOCHASTIC_FAMILIES",
    "FAMILY_PARAMETERS",
    "GeneratorSpec",
    "as_template",
    "derive_instance_seed",
]

STOCHASTIC_FAMILIES = frozenset({"s1", "s1m", "s2"})

#: Parameter names per family: (required, optional-with-default).
FAMILY_PARAMETERS: dict[str, tuple[tuple[str, ...], dict[str, object]]] = {
    "ring": (("L",), {}),
    "s1": (("L", "p", "alpha"), {}),
    "s1m": (("L", "t", "alpha"), {}),
    "s2": (("L", "t", "c", "alpha"), {}),
    "d1": (("L", "t"), {}),
    "d2": (("L",), {}),
    "circulant": (("s", "k"), {}),
    "d3": (("L", "K", "h", "hub"), {"hub_a": 1, "hub_b": 2}),
    "d4s": (("L", "b", "k"), {}),
    "d4": (("L", "b", "k"), {}),
}

FAMILY_NAMES = tuple(FAMILY_PARAMETERS)

_FLOAT_PARAMS = {"p", "alpha"}
_STR_PARAMS = {"hub"}


def derive_instance_seed(master_seed: int, index: int) -> int:
    """Deterministic 64-bit seed for ensemble instance ``index``."""
    if master_seed < 0 or index < 0:
        raise ParameterError("seeds and instance indices must be non-negative")
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(index,))
    return int(ss.generate_state(1, np.uint64)[0])


def _coerce(name: str, value):
    if name in _STR_PARAMS:
        if not isinstance(value, str):
            raise ParameterError(f"parameter {name!r} must be a string, got {value!r}")
        return value
    if name in _FLOAT_PARAMS:
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ParameterError(f"parameter {name!r} must be a number, got {value!r}") from None
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise ParameterError(f"parameter {name!r} must be an integer, got {value!r}")


def _hub_kind(params: dict) -> deterministic.HubGraphKind:
    hub = params["hub"]
    if hub == "star":
        return deterministic.Star()
    if hub == "loop":
        return deterministic.DoubleLoop(params["hub_a"], params["hub_b"])
    raise ParameterError(f"hub wiring must be 'star' or 'loop', got {hub!r}")


@dataclass(frozen=True)
class GeneratorSpec:
    """A construction family plus its parameter tuple (no seed).

    Acts as the grid-point template for sweeps and the CLI: stochastic
    families receive a seed at build time, deterministic ones ignore it.
    """

    family: str
    params: tuple[tuple[str, int | float | str], ...]

    @classmethod
    def make(cls, family: str, **params) -> "GeneratorSpec":
        if family not in FAMILY_PARAMETERS:
            raise ParameterError(
                f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}"
            )
        required, optional = FAMILY_PARAMETERS[family]
        clean: dict[str, int | float | str] = {}
        for name in required:
            if name not in params or params[name] is None:
                raise ParameterError(f"family {family!r} requires parameter {name!r}")
            clean[name] = _coerce(name, params[name])
        for name, default in optional.items():
            value = params.get(name)
            clean[name] = _coerce(name, value) if value is not None else default
        extras = {k for k, v in params.items() if v is not None} - set(clean)
        if extras:
            raise ParameterError(
                f"family {family!r} does not take parameters {sorted(extras)}"
            )
        spec = cls(family=family, params=tuple(sorted(clean.items())))
        spec.validate()
        return spec

    @property
    def param_dict(self) -> dict[str, int | float | str]:
        return dict(self.params)

    @property
    def is_stochastic(self) -> bool:
        return self.family in STOCHASTIC_FAMILIES

    def label(self) -> str:
        inner = " ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})" if inner else self.family

    def validate(self) -> None:
        """Raise ``ParameterError`` if the parameters violate the family's
        constraints; builds nothing."""
        p = self.param_dict
        family = self.family
        if family == "ring":
            new_ring(p["L"])
        elif family == "s1":
            stochastic.PowerLawSampler(p["L"], p["alpha"])
            if not 0 < p["p"] <= 1:
                raise ParameterError(f"attachment probability must be in (0, 1], got {p['p']}")
        elif family in ("s1m", "s2"):
            stochastic.PowerLawSampler(p["L"], p["alpha"])
            if not 1 <= p["t"] <= p["L"]:
                raise ParameterError(f"shortcut count must be in 1..L={p['L']}, got {p['t']}")
            if family == "s2" and not 0 <= p["c"] < p["t"]:
                raise ParameterError(f"conjoined count must satisfy 0 <= c < t, got {p['c']}")
        elif family == "d1":
            new_ring(p["L"])
            if p["t"] < 1:
                raise ParameterError(f"shortcut count must be >= 1, got {p['t']}")
        elif family == "d2":
            k = p["L"].bit_length() - 1
            if p["L"] < 8 or (1 << k) != p["L"]:
                raise ParameterError(f"node count must be a power of two >= 8, got {p['L']}")
        elif family == "circulant":
            deterministic.multiplicative_steps(p["s"], p["k"])
            if p["s"] ** p["k"] < 3:
                raise ParameterError("circulant needs at least 3 nodes")
        elif family == "d3":
            kind = _hub_kind(p)
            if p["K"] < 2 or p["K"] % 2 != 0:
                raise ParameterError(f"base connectivity K must be even and >= 2, got {p['K']}")
            if not 1 <= p["h"] <= p["L"]:
                raise ParameterError(f"hub count must be in 1..L={p['L']}, got {p['h']}")
            if p["h"] > 1:
                deterministic._hub_edges(p["h"], kind)
        elif family == "d4s":
            if p["b"] < 2 or p["k"] < 1 or p["L"] % (p["b"] ** p["k"]) != 0:
                raise ParameterError(
                    f"need L divisible by b**k with b >= 2, k >= 1; got L={p['L']}, b={p['b']}, k={p['k']}"
                )
        elif family == "d4":
            deterministic.D4Spec(L=p["L"], b=p["b"], k=p["k"])

    def build(self, seed: int | None = None) -> Network:
        """Construct one network; ``seed`` is required for stochastic families."""
        p = self.param_dict
        family = self.family
        if self.is_stochastic:
            if seed is None:
                raise ParameterError(f"family {family!r} needs a seed")
            if family == "s1":
                return stochastic.construct_s1(p["L"], p["p"], p["alpha"], seed)
            if family == "s1m":
                return stochastic.construct_s1m(p["L"], p["t"], p["alpha"], seed)
            return stochastic.construct_s2(p["L"], p["t"], p["c"], p["alpha"], seed)
        if family == "ring":
            return new_ring(p["L"])
        if family == "d1":
            return deterministic.construct_d1(p["L"], p["t"])
        if family == "d2":
            return deterministic.construct_d2(p["L"])
        if family == "circulant":
            return deterministic.construct_multiplicative_circulant(p["s"], p["k"])
        if family == "d3":
            return deterministic.construct_d3(p["L"], p["K"], p["h"], _hub_kind(p))
        if family == "d4s":
            return deterministic.construct_d4s(p["L"], p["b"], p["k"])
        if family == "d4":
            return deterministic.construct_d4(deterministic.D4Spec(p["L"], p["b"], p["k"]))
        raise ParameterError(f"unknown family {family!r}")

    def build_instance(self, master_seed: int, index: int) -> Network:
        """Build ensemble instance ``index`` (deterministic families ignore it)."""
        if not self.is_stochastic:
            return self.build()
        return self.build(seed=derive_instance_seed(master_seed, index))


def as_template(spec) -> GeneratorSpec:
    """Normalize a GeneratorSpec or StochasticSpec into a seedless template."""
    if isinstance(spec, GeneratorSpec):
        return spec
    if isinstance(spec, stochastic.StochasticSpec):
        params = {"L": spec.L, "alpha": spec.alpha}
        if spec.p is not None:
            params["p"] = spec.p
        if spec.t is not None:
            params["t"] = spec.t
        if spec.c is not None:
            params["c"] = spec.c
        return GeneratorSpec.make(spec.family, **params)
    raise ParameterError(f"cannot interpret {spec!r} as a generator spec")
