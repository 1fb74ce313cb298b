"""Command-line interface: generate, metrics, navigate, sweep, compare.

Every run writes a header with the tool version, the full configuration
echo and the master seed, so any output file can be reproduced
byte-identically from its own header.  CSV is the primary format; JSON
mirrors the same content.  Exit codes: 0 success, 2 configuration or
validation error, 3 runtime failure.
"""

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path

from . import __version__
from .families import FAMILY_NAMES, GeneratorSpec
from .metrics import (
    EXACT_ALL_PAIRS_LIMIT,
    EnsembleStats,
    ensemble_measure,
    estimate_average_distance,
    measure,
)
from .navigation import (
    TWO_LEVEL_MODES,
    NavPolicy,
    average_navigation_length,
    ensemble_navigation,
    navigation_histogram,
)
from .network import NetworkError, decode_network, encode_network, wiring_cost
from .optimize import (
    FrontierPoint,
    TargetKind,
    compare_families,
    default_weight_grid,
    percentile_frontier,
    sweep_minimize,
)
from .stochastic import ParameterError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3

_PARAM_FLAGS = ("L", "p", "t", "c", "alpha", "b", "k", "s", "K", "h", "hub", "hub_a", "hub_b")
_INT_RE = re.compile(r"^[+-]?\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lnskit",
        description="Construct ring lattices with shortcuts, measure path "
        "lengths, and run cost-quality sweeps.",
    )
    parser.add_argument("--version", action="version", version=f"lnskit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, seeded: bool = True) -> None:
        p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--threads", type=int, default=None, help="cap kernel worker threads")
        if seeded:
            p.add_argument(
                "--seed",
                type=int,
                default=0,
                help="master seed; single networks are ensemble instance 0 (default 0)",
            )
            p.add_argument("--n", type=int, default=1, help="ensemble size (stochastic families)")

    def add_family(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", choices=FAMILY_NAMES, help="generator family")
        p.add_argument("--L", type=int)
        p.add_argument("--p", type=float)
        p.add_argument("--t", type=int)
        p.add_argument("--c", type=int)
        p.add_argument("--alpha", type=float)
        p.add_argument("--b", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--K", type=int)
        p.add_argument("--h", type=int)
        p.add_argument("--hub", choices=("star", "loop"))
        p.add_argument("--hub-a", dest="hub_a", type=int)
        p.add_argument("--hub-b", dest="hub_b", type=int)

    gen = sub.add_parser("generate", help="construct a network and write its file")
    add_family(gen)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=Path, required=True, help="network file to write")

    met = sub.add_parser("metrics", help="measure distance, diameter and wiring cost")
    add_family(met)
    met.add_argument("--in", dest="infile", type=Path, help="read a network file instead")
    met.add_argument(
        "--sample-pairs",
        type=int,
        default=None,
        help="estimate the mean distance from this many sampled pairs",
    )
    met.add_argument(
        "--exact",
        action="store_true",
        help=f"force the exact all-pairs sweep beyond {EXACT_ALL_PAIRS_LIMIT} nodes",
    )
    add_common(met)

    nav = sub.add_parser("navigate", help="measure local-navigation path lengths")
    add_family(nav)
    nav.add_argument("--in", dest="infile", type=Path, help="read a network file instead")
    nav.add_argument("--nav", choices=("greedy", "two-level"), default="greedy")
    nav.add_argument("--two-level-mode", choices=TWO_LEVEL_MODES, default="rehop")
    nav.add_argument("--histogram", action="store_true", help="include per-pair hop histogram")
    add_common(nav)

    swp = sub.add_parser("sweep", help="minimize the cost-quality target over a grid")
    swp.add_argument("--grid", type=Path, required=True, help="grid file, one spec per line")
    swp.add_argument("--target", choices=[k.value for k in TargetKind], default="distance")
    swp.add_argument("--w-start", type=float, default=0.0)
    swp.add_argument("--w-stop", type=float, default=1.0)
    swp.add_argument("--w-step", type=float, default=0.05)
    swp.add_argument("--rank", type=int, default=None, help="use the rank-q instance instead of the mean")
    add_common(swp)

    cmp_ = sub.add_parser("compare", help="compare named frontier files per weight")
    cmp_.add_argument(
        "--frontier",
        action="append",
        required=True,
        metavar="NAME=PATH",
        help="named frontier CSV (repeat per family)",
    )
    add_common(cmp_, seeded=False)
    return parser


def _config_echo(args: argparse.Namespace) -> str:
    skip = {"command"}
    parts = []
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if value is None or value is False:
            continue
        if isinstance(value, Path):
            value = str(value)
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _spec_from_args(args: argparse.Namespace) -> GeneratorSpec:
    if not args.family:
        raise ParameterError("no generator family given (use --family)")
    params = {name: getattr(args, name, None) for name in _PARAM_FLAGS}
    return GeneratorSpec.make(args.family, **params)


def _header_lines(args: argparse.Namespace) -> list[str]:
    lines = [f"lnskit {__version__}", f"command: {args.command}", f"config: {_config_echo(args)}"]
    if hasattr(args, "seed"):
        lines.append(f"seed: {args.seed}")
    return lines


def _meta(args: argparse.Namespace) -> dict:
    meta = {
        "tool": "lnskit",
        "version": __version__,
        "command": args.command,
        "config": _config_echo(args),
    }
    if hasattr(args, "seed"):
        meta["seed"] = args.seed
    return meta


def _render_table(args, columns: list[str], rows: list[dict], trailer: list[str] | None = None) -> str:
    if args.format == "json":
        payload = {"meta": _meta(args), "rows": rows}
        if trailer:
            payload["notes"] = trailer
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    for line in _header_lines(args):
        buf.write(f"# {line}\n")
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    for line in trailer or []:
        buf.write(f"# {line}\n")
    return buf.getvalue()


def _write_output(args, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")


def _load_network(args) -> tuple:
    """Network plus a flag telling whether it came from a file."""
    if getattr(args, "infile", None) is not None:
        if args.family:
            raise ParameterError("give either --in or --family, not both")
        try:
            data = args.infile.read_bytes()
        except OSError as exc:
            raise RuntimeError(f"cannot read {args.infile}: {exc}") from exc
        return decode_network(data), True
    spec = _spec_from_args(args)
    seed = getattr(args, "seed", 0)
    if spec.is_stochastic:
        return spec.build_instance(seed, 0), False
    return spec.build(), False


def _apply_threads(args) -> None:
    threads = getattr(args, "threads", None)
    if threads is not None:
        if threads < 1:
            raise ParameterError(f"thread count must be >= 1, got {threads}")
        import numba

        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))


def cmd_generate(args) -> int:
    spec = _spec_from_args(args)
    # --seed is always the master seed; a single network is instance 0
    net = spec.build_instance(args.seed, 0)
    args.out.write_bytes(encode_network(net) + b"\n")
    summary = wiring_cost(net)
    sys.stdout.write(
        f"wrote {args.out}: L={net.L} shortcuts={net.shortcut_count} "
        f"cost_per_node={summary.unit_cost}\n"
    )
    return EXIT_OK


def _stats_rows(stats_by_name: dict[str, EnsembleStats]) -> list[dict]:
    rows = []
    for name, stats in stats_by_name.items():
        rows.append(
            {
                "metric": name,
                "mean": stats.mean,
                "std": stats.std,
                "min": stats.min,
                "max": stats.max,
                "n": stats.n,
            }
        )
    return rows


def cmd_metrics(args) -> int:
    _apply_threads(args)
    ensemble = getattr(args, "n", 1) > 1 and args.infile is None
    if ensemble:
        spec = _spec_from_args(args)
        if not spec.is_stochastic:
            raise ParameterError(f"family {spec.family!r} is deterministic; use --n 1")
        stats = ensemble_measure(spec, args.n, args.seed)
        text = _render_table(args, ["metric", "mean", "std", "min", "max", "n"], _stats_rows(stats))
        _write_output(args, text)
        return EXIT_OK
    net, _ = _load_network(args)
    rows: list[dict]
    if args.sample_pairs is not None:
        estimate, se = estimate_average_distance(net, args.sample_pairs, args.seed)
        cost = wiring_cost(net)
        rows = [
            {"metric": "node_count", "value": net.L},
            {"metric": "shortcut_count", "value": net.shortcut_count},
            {"metric": "cost_per_node", "value": cost.unit_cost},
            {"metric": "average_distance_estimate", "value": estimate},
            {"metric": "average_distance_se", "value": se},
        ]
    else:
        if net.L > EXACT_ALL_PAIRS_LIMIT and not args.exact:
            raise ParameterError(
                f"L={net.L} exceeds the exact sweep limit {EXACT_ALL_PAIRS_LIMIT}; "
                "pass --exact to force it or --sample-pairs N to estimate"
            )
        report = measure(net)
        rows = [{"metric": k, "value": v} for k, v in report.as_dict().items()]
    _write_output(args, _render_table(args, ["metric", "value"], rows))
    return EXIT_OK


def cmd_navigate(args) -> int:
    _apply_threads(args)
    policy = (
        NavPolicy(depth=1)
        if args.nav == "greedy"
        else NavPolicy(depth=2, two_level_mode=args.two_level_mode)
    )
    ensemble = getattr(args, "n", 1) > 1 and args.infile is None
    if ensemble:
        spec = _spec_from_args(args)
        if not spec.is_stochastic:
            raise ParameterError(f"family {spec.family!r} is deterministic; use --n 1")
        stats = ensemble_navigation(spec, policy, args.n, args.seed)
        text = _render_table(
            args, ["metric", "mean", "std", "min", "max", "n"], _stats_rows({"nav_length": stats})
        )
        _write_output(args, text)
        return EXIT_OK
    net, _ = _load_network(args)
    rows = [{"metric": "nav_length", "value": average_navigation_length(net, policy)}]
    if args.histogram:
        for hops, count in navigation_histogram(net, policy).items():
            rows.append({"metric": f"pairs_with_{hops}_hops", "value": count})
    _write_output(args, _render_table(args, ["metric", "value"], rows))
    return EXIT_OK


def parse_grid_file(path: Path) -> list[GeneratorSpec]:
    """One spec per line: ``family=NAME key=value ...``; '#' comments."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RuntimeError(f"cannot read grid file {path}: {exc}") from exc
    grid: list[GeneratorSpec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields: dict[str, object] = {}
        for token in line.split():
            if "=" not in token:
                raise ParameterError(f"{path}:{lineno}: expected key=value, got {token!r}")
            key, value = token.split("=", 1)
            fields[key] = _parse_scalar(value)
        family = fields.pop("family", None)
        if family is None:
            raise ParameterError(f"{path}:{lineno}: missing family=...")
        try:
            grid.append(GeneratorSpec.make(str(family), **fields))
        except ParameterError as exc:
            raise ParameterError(f"{path}:{lineno}: {exc}") from exc
    if not grid:
        raise ParameterError(f"grid file {path} contains no specs")
    return grid


def _parse_scalar(value: str) -> int | float | str:
    if _INT_RE.match(value):
        return int(value)
    try:
        return float(value)
    except ValueError:
        return value


def _weight_grid(args) -> list[float]:
    if (args.w_start, args.w_stop, args.w_step) == (0.0, 1.0, 0.05):
        return list(default_weight_grid())
    if args.w_step <= 0:
        raise ParameterError("weight step must be positive")
    count = int(round((args.w_stop - args.w_start) / args.w_step))
    grid = [round(args.w_start + i * args.w_step, 10) for i in range(count + 1)]
    grid = [w for w in grid if -1e-9 <= w <= 1.0 + 1e-9]
    if not grid:
        raise ParameterError("weight grid is empty")
    return [min(max(w, 0.0), 1.0) for w in grid]


def _frontier_rows(points: list[FrontierPoint]) -> list[dict]:
    rows = []
    for pt in points:
        rows.append(
            {
                "family": pt.spec.family,
                "w": pt.w,
                "params": " ".join(f"{k}={v}" for k, v in pt.spec.params),
                "target": pt.target_value,
                "quality": pt.quality,
                "cost": pt.cost,
            }
        )
    return rows


def cmd_sweep(args) -> int:
    _apply_threads(args)
    grid = parse_grid_file(args.grid)
    kind = TargetKind(args.target)
    w_list = _weight_grid(args)
    if args.rank is not None:
        points = percentile_frontier(grid, kind, w_list, args.n, args.rank, args.seed)
    else:
        points = sweep_minimize(grid, kind, w_list, args.n, args.seed)
    columns = ["family", "w", "params", "target", "quality", "cost"]
    _write_output(args, _render_table(args, columns, _frontier_rows(points)))
    return EXIT_OK


def _read_frontier_csv(path: Path) -> list[FrontierPoint]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RuntimeError(f"cannot read frontier file {path}: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    reader = csv.DictReader(lines)
    points = []
    for row in reader:
        try:
            params = {}
            if row.get("params"):
                for token in row["params"].split():
                    key, value = token.split("=", 1)
                    params[key] = _parse_scalar(value)
            spec = GeneratorSpec.make(row["family"], **params)
            points.append(
                FrontierPoint(
                    w=float(row["w"]),
                    spec=spec,
                    target_value=float(row["target"]),
                    quality=float(row["quality"]),
                    cost=float(row["cost"]),
                )
            )
        except (KeyError, ValueError) as exc:
            raise ParameterError(f"{path}: malformed frontier row {row!r}: {exc}") from exc
    if not points:
        raise ParameterError(f"frontier file {path} has no rows")
    return points


def cmd_compare(args) -> int:
    frontiers = {}
    for item in args.frontier:
        if "=" not in item:
            raise ParameterError(f"--frontier expects NAME=PATH, got {item!r}")
        name, path = item.split("=", 1)
        if name in frontiers:
            raise ParameterError(f"frontier name {name!r} repeated")
        frontiers[name] = _read_frontier_csv(Path(path))
    table = compare_families(frontiers)
    names = [name for name, _ in table.dominance]
    rows = []
    for row in table.rows:
        entry = {"w": row.w, "winner": row.winner}
        for name, value in row.targets:
            entry[f"target_{name}"] = value
        rows.append(entry)
    trailer = [f"dominance: {name}={frac}" for name, frac in table.dominance]
    columns = ["w", "winner"] + [f"target_{name}" for name in names]
    _write_output(args, _render_table(args, columns, rows, trailer=trailer))
    return EXIT_OK


_HANDLERS = {
    "generate": cmd_generate,
    "metrics": cmd_metrics,
    "navigate": cmd_navigate,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ParameterError, NetworkError, NotImplementedError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001 - boundary: report and exit 3
        sys.stderr.write(f"runtime error: {exc}\n")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
