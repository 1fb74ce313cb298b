"""lnskit: ring lattices with shortcuts, navigation, and cost-quality sweeps.

Construct small-world networks over a one-dimensional ring lattice by
stochastic (s1, s1m, s2) and deterministic (d1, d2, circulant, d3, d4s,
d4) generators, measure exact average distances and local-navigation path
lengths, and compare families by minimizing weighted cost-quality targets.
"""

__version__ = "0.1.0"

from .deterministic import (
    D4Spec,
    DoubleLoop,
    HubGraphKind,
    Star,
    circulant_diameter_formula,
    construct_circulant,
    construct_d1,
    construct_d2,
    construct_d3,
    construct_d4,
    construct_d4s,
    construct_multiplicative_circulant,
    d3_diameter_bound,
    d4_distance_bound,
    d4s_distance_bound,
    double_loop_diameter_formula,
    hub_graph_diameter,
    multiplicative_steps,
    star_diameter,
)
from .families import GeneratorSpec, derive_instance_seed
from .metrics import (
    EnsembleStats,
    MetricsReport,
    average_distance,
    bfs_distances,
    diameter,
    ensemble_measure,
    estimate_average_distance,
    measure,
)
from .navigation import (
    GREEDY,
    TWO_LEVEL,
    NavPolicy,
    NavResult,
    average_navigation_length,
    ensemble_navigation,
    navigate,
    navigate_greedy,
    navigate_two_level,
    navigation_histogram,
)
from .network import (
    DuplicateShortcutError,
    EncodingError,
    InvalidSizeError,
    Network,
    NetworkError,
    NodeRangeError,
    RingEdgeError,
    SelfLoopError,
    ShortcutLengthSummary,
    add_shortcut,
    decode_network,
    encode_network,
    lattice_distance,
    new_ring,
    wiring_cost,
)
from .optimize import (
    ComparisonTable,
    FrontierPoint,
    TargetKind,
    compare_families,
    default_weight_grid,
    percentile_frontier,
    sweep_minimize,
    target_function,
)
from .stochastic import (
    ParameterError,
    PowerLawSampler,
    SaturationError,
    StochasticSpec,
    construct_s1,
    construct_s1m,
    construct_s2,
    sample_shortcut_end,
)

__all__ = [
    "__version__",
    # network
    "Network",
    "ShortcutLengthSummary",
    "NetworkError",
    "InvalidSizeError",
    "NodeRangeError",
    "SelfLoopError",
    "RingEdgeError",
    "DuplicateShortcutError",
    "EncodingError",
    "lattice_distance",
    "new_ring",
    "add_shortcut",
    "wiring_cost",
    "encode_network",
    "decode_network",
    # stochastic
    "ParameterError",
    "SaturationError",
    "PowerLawSampler",
    "StochasticSpec",
    "sample_shortcut_end",
    "construct_s1",
    "construct_s1m",
    "construct_s2",
    # deterministic
    "D4Spec",
    "Star",
    "DoubleLoop",
    "HubGraphKind",
    "construct_d1",
    "construct_d2",
    "construct_circulant",
    "construct_multiplicative_circulant",
    "multiplicative_steps",
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
    # metrics
    "MetricsReport",
    "EnsembleStats",
    "bfs_distances",
    "average_distance",
    "diameter",
    "measure",
    "estimate_average_distance",
    "ensemble_measure",
    # navigation
    "NavPolicy",
    "NavResult",
    "GREEDY",
    "TWO_LEVEL",
    "navigate",
    "navigate_greedy",
    "navigate_two_level",
    "average_navigation_length",
    "navigation_histogram",
    "ensemble_navigation",
    # families / optimize
    "GeneratorSpec",
    "derive_instance_seed",
    "TargetKind",
    "FrontierPoint",
    "ComparisonTable",
    "default_weight_grid",
    "target_function",
    "sweep_minimize",
    "percentile_frontier",
    "compare_families",
]
