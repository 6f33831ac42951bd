"""Configuration-driven command line frontend.

``xychain run config.json`` executes one pipeline pass (build chain,
diagonalize, correlate, analyze) and writes matrix/summary artifacts;
``xychain recipes`` prints ready-made configurations reproducing the
documented distributions; ``xychain version`` prints the package version.

The config is a single JSON document with lower_snake_case keys; unknown keys
are rejected.  Exit codes: 0 success, 2 config validation failure, 3
numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import cluster_report, distinct_values
from .chains import INTERACTIONS, PROFILES, ChainSpec, build_couplings, build_hamiltonian
from .correlations import StateValidityError, correlation_matrix, stationary_profile
from .dynamics import stationarity_report
from .spectral import ConvergenceError, diagonalize

MEASURES = ("discord", "concurrence")
METHODS = ("closed", "oracle", "both")

CHAIN_KEYS = {"n_sites", "profile", "interaction", "delta", "d1", "d2", "d3",
              "couplings", "positions"}
STATE_KEYS = {"kind", "j", "beta"}
OUTPUT_KEYS = {"matrix_csv", "summary_json", "clusters", "threshold"}
TOP_KEYS = {"chain", "initial_state", "measures", "method", "stationarity_taus",
            "outputs"}


class ConfigError(ValueError):
    """Invalid run configuration; the message names the offending field."""


def _require_keys(section: dict, allowed: set, label: str) -> None:
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {label}: {', '.join(sorted(unknown))}")


def parse_config(raw: dict) -> dict:
    """Validate the raw JSON document and normalize defaults."""
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    _require_keys(raw, TOP_KEYS, "config")
    chain = raw.get("chain")
    if not isinstance(chain, dict):
        raise ConfigError("chain: required object missing")
    _require_keys(chain, CHAIN_KEYS, "chain")
    if "n_sites" not in chain:
        raise ConfigError("chain.n_sites: required")
    profile = chain.get("profile", "homogeneous")
    if profile not in PROFILES:
        raise ConfigError(f"chain.profile: unknown value {profile!r}")
    interaction = chain.get("interaction", "nearest_neighbor")
    if interaction not in INTERACTIONS:
        raise ConfigError(f"chain.interaction: unknown value {interaction!r}")
    try:
        spec = ChainSpec(
            n_sites=int(chain["n_sites"]),
            profile=profile,
            interaction=interaction,
            delta=chain.get("delta"),
            d1=chain.get("d1"), d2=chain.get("d2"), d3=chain.get("d3"),
            couplings=tuple(chain["couplings"]) if "couplings" in chain else None,
            positions=tuple(chain["positions"]) if "positions" in chain else None,
        )
    except ValueError as exc:
        raise ConfigError(f"chain: {exc}") from exc

    state = raw.get("initial_state")
    if not isinstance(state, dict):
        raise ConfigError("initial_state: required object missing")
    _require_keys(state, STATE_KEYS, "initial_state")
    kind = state.get("kind")
    if kind not in ("excited", "polarized"):
        raise ConfigError(f"initial_state.kind: expected excited or polarized, got {kind!r}")
    if "j" not in state:
        raise ConfigError("initial_state.j: required")
    j = int(state["j"])
    if not 1 <= j <= spec.n_sites:
        raise ConfigError(f"initial_state.j: {j} outside 1..{spec.n_sites}")
    beta = state.get("beta")
    if kind == "polarized":
        if beta is None:
            raise ConfigError("initial_state.beta: required for the polarized state")
        beta = float(beta)
        if beta < 0:
            raise ConfigError("initial_state.beta: must be non-negative")
    elif beta is not None:
        raise ConfigError("initial_state.beta: only meaningful for the polarized state")

    measures = raw.get("measures", ["discord"])
    if (not isinstance(measures, list) or not measures
            or any(m not in MEASURES for m in measures)):
        raise ConfigError(f"measures: expected a non-empty subset of {MEASURES}")
    method = raw.get("method", "closed")
    if method not in METHODS:
        raise ConfigError(f"method: expected one of {METHODS}, got {method!r}")
    taus = raw.get("stationarity_taus")
    if taus is not None:
        if not isinstance(taus, list) or not taus:
            raise ConfigError("stationarity_taus: expected a non-empty list of reals")
        taus = [float(t) for t in taus]
    outputs = raw.get("outputs", {})
    if not isinstance(outputs, dict):
        raise ConfigError("outputs: expected an object")
    _require_keys(outputs, OUTPUT_KEYS, "outputs")
    threshold = float(outputs.get("threshold", 1e-9))
    if threshold <= 0:
        raise ConfigError("outputs.threshold: must be positive")
    return {
        "spec": spec,
        "kind": kind,
        "j": j,
        "beta": beta,
        "measures": list(dict.fromkeys(measures)),
        "method": method,
        "taus": taus,
        "matrix_csv": outputs.get("matrix_csv"),
        "summary_json": outputs.get("summary_json"),
        "clusters": bool(outputs.get("clusters", False)),
        "threshold": threshold,
    }


def _matrix_path(base: str, measure: str, n_measures: int) -> Path:
    path = Path(base)
    if n_measures == 1:
        return path
    return path.with_name(f"{path.stem}.{measure}{path.suffix or '.csv'}")


def _write_matrix(path: Path, matrix: np.ndarray, measure: str) -> None:
    np.savetxt(path, matrix, fmt="%.12g", delimiter=",")
    labels = {
        "measure": measure,
        "modes": list(range(1, matrix.shape[0] + 1)),
        "layout": "row i / column j = eigenmode labels i, j (1-based), no header",
    }
    sidecar = path.with_suffix(".labels.json") if path.suffix else Path(str(path) + ".labels.json")
    sidecar.write_text(json.dumps(labels, sort_keys=True, indent=2) + "\n")


def run_config(cfg: dict) -> dict:
    """Execute a parsed config; returns the summary dict and writes artifacts."""
    spec: ChainSpec = cfg["spec"]
    h = build_hamiltonian(build_couplings(spec))
    dec = diagonalize(h)
    profile = stationary_profile(dec, cfg["kind"], cfg["j"], cfg["beta"])
    threads = cfg.get("threads", 1)

    matrices = {}
    oracle_matrices = {}
    for measure in cfg["measures"]:
        if cfg["method"] in ("closed", "both"):
            matrices[measure] = correlation_matrix(profile, measure, method="closed")
        if cfg["method"] in ("oracle", "both"):
            oracle_matrices[measure] = correlation_matrix(
                profile, measure, method="oracle", threads=threads)
        if cfg["method"] == "oracle":
            matrices[measure] = oracle_matrices[measure]

    summary = {
        "chain": {
            "n_sites": spec.n_sites,
            "profile": spec.profile,
            "interaction": spec.interaction,
        },
        "initial_state": {"kind": cfg["kind"], "j": cfg["j"]},
        "method": cfg["method"],
        "eigenvalues": [round(float(e), 12) for e in dec.eigenvalues],
        "measures": {},
    }
    if cfg["beta"] is not None:
        summary["initial_state"]["beta"] = cfg["beta"]

    report = None
    for measure, matrix in matrices.items():
        rep = cluster_report(profile, matrix, threshold=cfg["threshold"])
        report = rep
        summary["measures"][measure] = {
            "distinct_values": [round(float(v), 6) for v in distinct_values(matrix)],
            "spread": round(rep.spread, 12),
            "max_value": round(float(matrix.max()), 12),
        }
        if cfg["clusters"]:
            summary["measures"][measure]["clusters"] = [list(c) for c in rep.clusters]
    if report is not None:
        summary["zero_nodes"] = list(report.zero_nodes)
        summary["classes"] = [
            {"weight": round(cls.weight, 12), "members": list(cls.members)}
            for cls in report.classes
        ]
    if cfg["method"] == "both":
        discrepancy = 0.0
        for measure, oracle_matrix in oracle_matrices.items():
            discrepancy = max(discrepancy,
                              float(np.abs(matrices[measure] - oracle_matrix).max()))
        summary["max_closed_vs_oracle"] = discrepancy
    if cfg["taus"] is not None:
        rep = stationarity_report(dec, cfg["kind"], cfg["j"], cfg["beta"], cfg["taus"])
        summary["stationarity"] = {
            "taus": list(rep.taus),
            "max_deviation": rep.max_deviation,
        }

    if cfg["matrix_csv"]:
        for measure, matrix in matrices.items():
            _write_matrix(_matrix_path(cfg["matrix_csv"], measure, len(matrices)),
                          matrix, measure)
    if cfg["summary_json"]:
        Path(cfg["summary_json"]).write_text(
            json.dumps(summary, sort_keys=True, indent=2) + "\n")
    return summary


RECIPES = {
    "fig1a": ("homogeneous N=41 excited j=1 (bell-shaped discord)",
              {"chain": {"n_sites": 41}, "initial_state": {"kind": "excited", "j": 1},
               "measures": ["discord"]}),
    "fig1b": ("homogeneous N=41 excited j=7 (six discord values, zero modes 6i)",
              {"chain": {"n_sites": 41}, "initial_state": {"kind": "excited", "j": 7},
               "measures": ["discord"]}),
    "fig2": ("DDI all-node variant of fig1b",
             {"chain": {"n_sites": 41, "interaction": "all_pairs_ddi"},
              "initial_state": {"kind": "excited", "j": 7}, "measures": ["discord"]}),
    "fig3a": ("alternating delta=0.1 excited j=14",
              {"chain": {"n_sites": 41, "profile": "alternating", "delta": 0.1},
               "initial_state": {"kind": "excited", "j": 14}, "measures": ["discord"]}),
    "fig3b": ("companion run j=13 for the |Q(j=14)-Q(j=13)| comparison",
              {"chain": {"n_sites": 41, "profile": "alternating", "delta": 0.1},
               "initial_state": {"kind": "excited", "j": 13}, "measures": ["discord"]}),
    "fig4a": ("3-alternating (1, 1/2, 1/4) excited j=2",
              {"chain": {"n_sites": 41, "profile": "three_alternating",
                         "d1": 1.0, "d2": 0.5, "d3": 0.25},
               "initial_state": {"kind": "excited", "j": 2}, "measures": ["discord"]}),
    "fig4b": ("3-alternating excited j=20",
              {"chain": {"n_sites": 41, "profile": "three_alternating",
                         "d1": 1.0, "d2": 0.5, "d3": 0.25},
               "initial_state": {"kind": "excited", "j": 20}, "measures": ["discord"]}),
    "fig4c": ("3-alternating excited j=21 (cluster 15..27 odd)",
              {"chain": {"n_sites": 41, "profile": "three_alternating",
                         "d1": 1.0, "d2": 0.5, "d3": 0.25},
               "initial_state": {"kind": "excited", "j": 21}, "measures": ["discord"]}),
    "fig4d": ("3-alternating excited j=40 (modes 14 and 28 pair up)",
              {"chain": {"n_sites": 41, "profile": "three_alternating",
                         "d1": 1.0, "d2": 0.5, "d3": 0.25},
               "initial_state": {"kind": "excited", "j": 40}, "measures": ["discord"]}),
    "fig5a": ("perfect-transfer couplings excited j=1",
              {"chain": {"n_sites": 41, "profile": "cdel"},
               "initial_state": {"kind": "excited", "j": 1}, "measures": ["discord"]}),
    "fig5b": ("perfect-transfer couplings excited j=21 (odd-mode cluster)",
              {"chain": {"n_sites": 41, "profile": "cdel"},
               "initial_state": {"kind": "excited", "j": 21}, "measures": ["discord"]}),
    "fig6a": ("homogeneous polarized beta=10 j=1",
              {"chain": {"n_sites": 41},
               "initial_state": {"kind": "polarized", "j": 1, "beta": 10.0},
               "measures": ["discord"]}),
    "fig6b": ("homogeneous polarized beta=10 j=7",
              {"chain": {"n_sites": 41},
               "initial_state": {"kind": "polarized", "j": 7, "beta": 10.0},
               "measures": ["discord"]}),
    "fig7": ("alternating delta=1/2 polarized j=41 (mode 21 pairs with all)",
             {"chain": {"n_sites": 41, "profile": "alternating", "delta": 0.5},
              "initial_state": {"kind": "polarized", "j": 41, "beta": 10.0},
              "measures": ["discord"]}),
    "qex_cex": ("homogeneous excited j=7, discord and concurrence value tables",
                {"chain": {"n_sites": 41}, "initial_state": {"kind": "excited", "j": 7},
                 "measures": ["discord", "concurrence"]}),
    "qpol": ("homogeneous polarized beta=10 j=7, discord value table",
             {"chain": {"n_sites": 41},
              "initial_state": {"kind": "polarized", "j": 7, "beta": 10.0},
              "measures": ["discord"]}),
}


def list_recipes() -> str:
    lines = ["Available recipes (pass the JSON below to `xychain run`):", ""]
    for name, (description, config) in RECIPES.items():
        lines.append(f"{name}: {description}")
        lines.append(json.dumps(config, sort_keys=True))
        lines.append("")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="xychain",
        description="Stationary pairwise discord/concurrence between chain eigenmodes.")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for oracle-method pair evaluation")
    sub = parser.add_subparsers(dest="command", required=True)
    run_parser = sub.add_parser("run", help="execute a JSON run configuration")
    run_parser.add_argument("config", type=Path)
    sub.add_parser("recipes", help="print ready-made configurations")
    sub.add_parser("version", help="print the package version")
    args = parser.parse_args(argv)

    if args.command == "version":
        print(__version__)
        return 0
    if args.command == "recipes":
        print(list_recipes())
        return 0

    try:
        raw = json.loads(args.config.read_text())
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = parse_config(raw)
        if args.threads < 1:
            raise ConfigError("--threads: must be >= 1")
        cfg["threads"] = args.threads
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        summary = run_config(cfg)
    except (ConvergenceError, StateValidityError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    if not cfg["summary_json"]:
        print(json.dumps(summary, sort_keys=True, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
