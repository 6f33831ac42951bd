"""Coupling matrices and single-excitation Hamiltonians of open spin-1/2 XY chains.

Couplings are dimensionless, measured in units of the first-bond coupling, and
sites carry 1-based labels throughout the public interface.  The flip-flop
Hamiltonian restricted to the single-excitation sector is the N x N matrix
with elements h_nm = d_nm / 2 off the diagonal and zeros on it; for the
homogeneous chain this reproduces the spectrum cos(pi k / (N + 1)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PROFILES = ("homogeneous", "alternating", "three_alternating", "cdel", "explicit")
INTERACTIONS = ("nearest_neighbor", "all_pairs_ddi")


@dataclass(frozen=True)
class ChainSpec:
    """Declarative description of a chain: length, couplings, interaction range.

    Parameters
    ----------
    n_sites : int
        Number of sites N >= 2.
    profile : str
        One of ``homogeneous`` (all bonds 1), ``alternating`` (odd bonds 1,
        even bonds ``delta``), ``three_alternating`` (bonds repeat the pattern
        ``d1, d2, d3``), ``cdel`` (perfect-state-transfer couplings
        sqrt(i (N - i) / (N - 1))) or ``explicit`` (``couplings`` as given).
    interaction : str
        ``nearest_neighbor`` or ``all_pairs_ddi``.  Dipolar couplings connect
        every pair with strength 1/xi^3 where xi is the inter-site distance.
    positions : sequence of float, optional
        Strictly increasing dimensionless site coordinates with unit first
        spacing.  Defaults to the equidistant grid 0, 1, ..., N - 1.  Only the
        dipolar range uses them; an inhomogeneous profile under ``all_pairs_ddi``
        must supply them explicitly because the geometry is otherwise undefined.
    """

    n_sites: int
    profile: str = "homogeneous"
    interaction: str = "nearest_neighbor"
    delta: float | None = None
    d1: float | None = None
    d2: float | None = None
    d3: float | None = None
    couplings: tuple[float, ...] | None = None
    positions: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.n_sites < 2:
            raise ValueError(f"n_sites must be >= 2, got {self.n_sites}")
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}; expected one of {PROFILES}")
        if self.interaction not in INTERACTIONS:
            raise ValueError(
                f"unknown interaction {self.interaction!r}; expected one of {INTERACTIONS}"
            )
        if self.profile == "alternating":
            if self.delta is None or self.delta <= 0:
                raise ValueError("alternating profile requires delta > 0")
        elif self.delta is not None:
            raise ValueError("delta is only meaningful for the alternating profile")
        if self.profile == "three_alternating":
            for name, value in (("d1", self.d1), ("d2", self.d2), ("d3", self.d3)):
                if value is None or value <= 0:
                    raise ValueError(f"three_alternating profile requires {name} > 0")
        elif not (self.d1 is None and self.d2 is None and self.d3 is None):
            raise ValueError("d1/d2/d3 are only meaningful for the three_alternating profile")
        if self.profile == "explicit":
            if self.couplings is None:
                raise ValueError("explicit profile requires a coupling list")
            object.__setattr__(self, "couplings", tuple(float(c) for c in self.couplings))
            if len(self.couplings) != self.n_sites - 1:
                raise ValueError(
                    f"explicit coupling list must have length {self.n_sites - 1}, "
                    f"got {len(self.couplings)}"
                )
            if any(c <= 0 for c in self.couplings):
                raise ValueError("explicit couplings must be positive")
        elif self.couplings is not None:
            raise ValueError("couplings are only meaningful for the explicit profile")
        if self.positions is not None:
            object.__setattr__(self, "positions", tuple(float(x) for x in self.positions))
            if len(self.positions) != self.n_sites:
                raise ValueError(f"positions must list all {self.n_sites} sites")
            diffs = np.diff(self.positions)
            if np.any(diffs <= 0):
                raise ValueError("positions must be strictly increasing")
            if abs(diffs[0] - 1.0) > 1e-12:
                raise ValueError("positions must have unit spacing between sites 1 and 2")
        if (
            self.interaction == "all_pairs_ddi"
            and self.profile != "homogeneous"
            and self.positions is None
        ):
            raise ValueError(
                "all_pairs_ddi with an inhomogeneous profile needs explicit positions; "
                "the dipolar geometry is undefined otherwise"
            )

    def site_positions(self) -> np.ndarray:
        if self.positions is not None:
            return np.asarray(self.positions, dtype=float)
        return np.arange(self.n_sites, dtype=float)


def _bond_values(spec: ChainSpec) -> np.ndarray:
    """Nearest-neighbor bond strengths d_i for bonds i = 1 .. N-1."""
    n = spec.n_sites
    i = np.arange(1, n)
    if spec.profile == "homogeneous":
        return np.ones(n - 1)
    if spec.profile == "alternating":
        return np.where(i % 2 == 1, 1.0, spec.delta)
    if spec.profile == "three_alternating":
        pattern = np.array([spec.d1, spec.d2, spec.d3], dtype=float)
        return pattern[(i - 1) % 3]
    if spec.profile == "cdel":
        return np.sqrt(i * (n - i) / (n - 1))
    return np.asarray(spec.couplings, dtype=float)


def build_couplings(spec: ChainSpec) -> np.ndarray:
    """Build the symmetric N x N coupling matrix d for a chain.

    Nearest-neighbor chains place the profile's bond values on the first
    off-diagonal; dipolar chains couple every pair with 1/xi^3 computed from
    the site positions.
    """
    n = spec.n_sites
    d = np.zeros((n, n))
    if spec.interaction == "nearest_neighbor":
        bonds = _bond_values(spec)
        idx = np.arange(n - 1)
        d[idx, idx + 1] = bonds
        d[idx + 1, idx] = bonds
        return d
    xi = spec.site_positions()
    sep = np.abs(xi[:, None] - xi[None, :])
    np.fill_diagonal(sep, 1.0)  # avoid 0**-3; diagonal is zeroed below
    d = sep**-3
    np.fill_diagonal(d, 0.0)
    return d


def build_hamiltonian(d: np.ndarray) -> np.ndarray:
    """Single-excitation Hamiltonian matrix h = d/2 with a zero diagonal."""
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("coupling matrix must be square")
    if not np.allclose(d, d.T, atol=1e-12):
        raise ValueError("coupling matrix must be symmetric")
    h = d / 2.0
    np.fill_diagonal(h, 0.0)
    return h


def build_chain(spec: ChainSpec) -> np.ndarray:
    """Convenience: couplings plus Hamiltonian in one step."""
    return build_hamiltonian(build_couplings(spec))
