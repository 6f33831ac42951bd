"""Cluster phenomenology of correlation matrices.

Weights built from sine zeros land at ~1e-16 rather than 0, so every grouping
here works with explicit tolerances (default 1e-9).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import StationaryProfile

CLASS_TOL = 1e-9
ZERO_TOL = 1e-9


@dataclass(frozen=True)
class WeightClass:
    weight: float
    members: tuple[int, ...]  # 1-based mode labels


@dataclass(frozen=True)
class ClusterReport:
    """Zero modes, equal-weight classes, correlated clusters, and spread."""

    zero_nodes: tuple[int, ...]
    classes: tuple[WeightClass, ...]
    clusters: tuple[tuple[int, ...], ...]
    spread: float


def predict_zero_nodes(n_sites: int, j: int) -> list[int]:
    """Modes that decouple for a homogeneous chain excited/polarized at site j.

    The weight of mode n is proportional to sin^2(pi n j / (N+1)), which
    vanishes exactly when n*j is a multiple of N+1.
    """
    return [n for n in range(1, n_sites + 1) if (n * j) % (n_sites + 1) == 0]


def equal_weight_classes(profile: StationaryProfile,
                         class_tol: float = CLASS_TOL) -> list[WeightClass]:
    """Group modes by stationary weight, sorted by weight descending.

    Modes whose weights differ by less than ``class_tol`` share a class; a
    zero-weight class (if any) comes last.
    """
    weights = np.asarray(profile.weights, dtype=float)
    order = np.argsort(-weights, kind="stable")
    classes: list[WeightClass] = []
    current: list[int] = []
    for idx in order:
        if current and abs(weights[current[0] - 1] - weights[idx]) > class_tol:
            classes.append(_finish_class(weights, current))
            current = []
        current.append(int(idx) + 1)
    if current:
        classes.append(_finish_class(weights, current))
    return classes


def _finish_class(weights: np.ndarray, members: list[int]) -> WeightClass:
    mean = float(np.mean([weights[m - 1] for m in members]))
    return WeightClass(weight=mean, members=tuple(sorted(members)))


def extract_clusters(matrix: np.ndarray, threshold: float) -> list[tuple[int, ...]]:
    """Connected components of the graph with edges where the measure exceeds
    ``threshold``; singletons are dropped.  Members are 1-based labels."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    matrix = np.asarray(matrix)
    n = matrix.shape[0]
    adjacency = matrix > threshold
    seen: set[int] = set()
    clusters = []
    for start in range(n):
        if start in seen:
            continue
        component = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for neighbor in np.flatnonzero(adjacency[node]):
                if neighbor not in component:
                    component.add(int(neighbor))
                    frontier.append(int(neighbor))
        seen |= component
        if len(component) > 1:
            clusters.append(tuple(sorted(m + 1 for m in component)))
    return clusters


def spread(matrix: np.ndarray, zero_tol: float = ZERO_TOL) -> float:
    """(max - smallest nonzero) / max over off-diagonal entries above zero_tol.

    Zero when the matrix has no entry above the tolerance; zero for a uniform
    nonzero matrix.
    """
    matrix = np.asarray(matrix, dtype=float)
    mask = ~np.eye(matrix.shape[0], dtype=bool)
    values = matrix[mask]
    values = values[values > zero_tol]
    if values.size == 0:
        return 0.0
    return float((values.max() - values.min()) / values.max())


def distinct_values(matrix: np.ndarray, tol: float = ZERO_TOL) -> np.ndarray:
    """Distinct nonzero off-diagonal values, clustered with tolerance ``tol``.

    Returns one representative (the cluster mean) per value, descending.
    """
    matrix = np.asarray(matrix, dtype=float)
    mask = ~np.eye(matrix.shape[0], dtype=bool)
    values = np.sort(matrix[mask])
    values = values[values > tol]
    if values.size == 0:
        return np.array([])
    splits = np.flatnonzero(np.diff(values) > tol) + 1
    groups = np.split(values, splits)
    return np.array([g.mean() for g in groups])[::-1]


def zero_weight_nodes(profile: StationaryProfile, zero_tol: float = ZERO_TOL) -> list[int]:
    return [i + 1 for i, w in enumerate(profile.weights) if w <= zero_tol]


def cluster_report(profile: StationaryProfile, matrix: np.ndarray,
                   threshold: float = ZERO_TOL, class_tol: float = CLASS_TOL,
                   zero_tol: float = ZERO_TOL) -> ClusterReport:
    """Assemble the full cluster summary for one profile and its matrix."""
    all_classes = equal_weight_classes(profile, class_tol)
    zero_nodes: tuple[int, ...] = ()
    classes = []
    for cls in all_classes:
        if cls.weight <= zero_tol:
            zero_nodes = tuple(sorted(zero_nodes + cls.members))
        else:
            classes.append(cls)
    return ClusterReport(
        zero_nodes=zero_nodes,
        classes=tuple(classes),
        clusters=tuple(extract_clusters(matrix, threshold)),
        spread=spread(matrix, zero_tol),
    )
