"""Pairwise quantum correlations between eigenmodes for two initial states.

A single excited site j populates eigenmode n with the stationary weight
w_n = U_nj^2; a single polarized site at inverse temperature beta populates it
with J_nn = tanh(beta/2)/2 * U_nj^2.  Tracing the mode-basis density matrix
down to any two modes (n, m) yields a two-qubit X-state whose diagonal is
time-independent and whose single coherence only rotates in phase, so every
pairwise correlation measure computed here is a constant of the motion.

Discord follows the projective-measurement definition: total mutual
information minus the largest classical correlation extractable by one-qubit
von Neumann measurements, with all entropies in bits and the convention
0*log2(0) = 0.  Closed forms for both state families are cross-checked by a
Bloch-sphere grid minimization that knows nothing about the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import SpectralDecomposition

KINDS = ("excited", "polarized")
PSD_TOL = 1e-12
DEFAULT_GRID = 181


class StateValidityError(RuntimeError):
    """Raised when a density matrix violates positivity beyond tolerance."""


def xlog2x(x):
    """x * log2(x) elementwise with the 0 log 0 = 0 convention."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(x > 0.0, x * np.log2(np.where(x > 0.0, x, 1.0)), 0.0)
    return out


def binary_entropy(p):
    return -xlog2x(p) - xlog2x(1.0 - np.asarray(p, dtype=float))


def _bloch_entropy(theta):
    """Entropy of a qubit with Bloch-vector length theta."""
    theta = np.clip(np.asarray(theta, dtype=float), 0.0, 1.0)
    return binary_entropy((1.0 + theta) / 2.0)


# ---------------------------------------------------------------------------
# stationary mode weights


@dataclass(frozen=True)
class StationaryProfile:
    """Time-independent mode occupation weights for one initial state.

    ``weights[n - 1]`` is w_n (excited) or J_nn (polarized).  ``amplitudes``
    keeps the signed source-site components of the modes; only correlation
    phases depend on them, never the measures.
    """

    weights: np.ndarray
    kind: str
    source_node: int
    beta: float | None = None
    amplitudes: np.ndarray | None = None

    @property
    def n_modes(self) -> int:
        return len(self.weights)

    def pair(self, n: int, m: int) -> tuple[float, float]:
        """Weights of modes n and m (1-based)."""
        return float(self.weights[n - 1]), float(self.weights[m - 1])


def stationary_profile(dec: SpectralDecomposition, kind: str, j: int,
                       beta: float | None = None) -> StationaryProfile:
    """Stationary weights of all modes for a single excited or polarized site.

    Excited: w_n = U_nj^2 (sums to 1).  Polarized: J_nn = tanh(beta/2)/2 *
    U_nj^2 (sums to tanh(beta/2)/2).  The polarized reduction assumes a
    nearest-neighbor chain, where the eigenmodes are free-fermion modes of the
    string transformation.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    n = dec.n_modes
    if not 1 <= j <= n:
        raise ValueError(f"source node {j} outside 1..{n}")
    amplitudes = dec.site_amplitudes(j).copy()
    if kind == "excited":
        if beta is not None:
            raise ValueError("beta is only meaningful for the polarized state")
        weights = amplitudes**2
    else:
        if beta is None:
            raise ValueError("the polarized state requires beta")
        if beta < 0:
            raise ValueError("beta must be non-negative")
        weights = np.tanh(beta / 2.0) / 2.0 * amplitudes**2
    return StationaryProfile(weights=weights, kind=kind, source_node=j,
                             beta=beta, amplitudes=amplitudes)


# ---------------------------------------------------------------------------
# two-mode reduced states


@dataclass(frozen=True)
class XState:
    """4x4 two-qubit density matrix with X structure.

    Basis order |00>, |01>, |10>, |11>; the only off-diagonal element sits at
    (|01>, |10>).  ``kind`` records which construction produced it.
    """

    matrix: np.ndarray
    kind: str | None = None

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.diagonal(self.matrix))

    @property
    def coherence(self) -> complex:
        return complex(self.matrix[1, 2])

    def validate(self, atol: float = PSD_TOL) -> None:
        m = self.matrix
        if m.shape != (4, 4):
            raise StateValidityError("X-state matrix must be 4x4")
        if not np.allclose(m, m.conj().T, atol=atol):
            raise StateValidityError("X-state matrix must be Hermitian")
        if abs(np.trace(m).real - 1.0) > atol:
            raise StateValidityError(f"trace {np.trace(m).real} != 1")
        evals = np.linalg.eigvalsh(m)
        if evals.min() < -atol:
            raise StateValidityError(f"negative eigenvalue {evals.min():.3e}")


def _as_matrix(state) -> np.ndarray:
    m = state.matrix if isinstance(state, XState) else np.asarray(state)
    return np.asarray(m, dtype=complex)


def reduced_xstate(profile: StationaryProfile, n: int, m: int,
                   phase: float = 0.0) -> XState:
    """Reduce the stationary state to eigenmodes n and m (1-based).

    Excited source: diag(1 - w_n - w_m, w_n, w_m, 0) with coherence
    sqrt(w_n w_m) e^{i phase}.  Polarized source: diag(J00 + J_mm + J_nn,
    J00 + J_mm, J00 + J_nn, J00) with J00 = 1/4 - (J_nn + J_mm)/2 and
    coherence sqrt(J_nn J_mm) e^{i phase} carrying the sign of the two source
    amplitudes.  The phase (and sign) never affects any measure below.
    """
    if n == m:
        raise ValueError("the two modes must differ")
    w_n, w_m = profile.pair(n, m)
    z_mag = np.sqrt(w_n * w_m)
    if profile.amplitudes is not None:
        sgn = profile.amplitudes[n - 1] * profile.amplitudes[m - 1]
        if sgn < 0:
            z_mag = -z_mag
    z = z_mag * np.exp(1j * phase)
    rho = np.zeros((4, 4), dtype=complex)
    if profile.kind == "excited":
        rho[0, 0] = 1.0 - w_n - w_m
        rho[1, 1] = w_n
        rho[2, 2] = w_m
    else:
        j00 = 0.25 - (w_n + w_m) / 2.0
        rho[0, 0] = j00 + w_m + w_n
        rho[1, 1] = j00 + w_m
        rho[2, 2] = j00 + w_n
        rho[3, 3] = j00
    rho[1, 2] = z
    rho[2, 1] = np.conj(z)
    return XState(matrix=rho, kind=profile.kind)


# ---------------------------------------------------------------------------
# concurrence


def concurrence_excited(w_n, w_m):
    """Concurrence between two modes of the excited-site state: 2 sqrt(w_n w_m)."""
    w_n = np.asarray(w_n, dtype=float)
    w_m = np.asarray(w_m, dtype=float)
    c = 2.0 * np.sqrt(w_n * w_m)
    return float(c) if c.ndim == 0 else c


def concurrence_wootters(state) -> float:
    """Spin-flip concurrence of an arbitrary two-qubit density matrix.

    max(0, 2 lambda_max - sum lambda_i) over the square roots of the
    eigenvalues of rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
    """
    rho = _as_matrix(state)
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -PSD_TOL:
        raise StateValidityError(f"negative eigenvalue {evals.min():.3e}")
    sy = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    flip = np.kron(sy, sy)
    product = rho @ flip @ rho.conj() @ flip
    lam_sq = np.real(np.linalg.eigvals(product))
    # values below the eigensolver's backward-error resolution are exact zeros
    # of the product; taking their square root would inject sqrt(eps) noise
    floor = 256.0 * np.finfo(float).eps * np.linalg.norm(product)
    lam = np.sqrt(np.where(lam_sq > floor, lam_sq, 0.0))
    lam.sort()
    return float(max(0.0, 2.0 * lam[-1] - lam.sum()))


# ---------------------------------------------------------------------------
# discord closed forms


def _discord_side_excited(w_n, w_m):
    """Discord with the measurement on the second mode, excited-state family.

    Equals S(measured marginal) - S(rho) + S_cond where the conditional
    entropy comes from the optimal (transverse) measurement axis.
    """
    w_n = np.asarray(w_n, dtype=float)
    w_m = np.asarray(w_m, dtype=float)
    sigma = np.clip(1.0 - w_n - w_m, 0.0, 1.0)
    theta = np.sqrt(np.clip(1.0 - 4.0 * w_m * sigma, 0.0, 1.0))
    q = (1.0
         - xlog2x(w_n) - xlog2x(1.0 - w_n)
         + xlog2x(w_n + w_m) + xlog2x(sigma)
         - 0.5 * xlog2x(1.0 - theta) - 0.5 * xlog2x(1.0 + theta))
    # rounding can leave values like -1e-16 for near-zero weights
    return np.where(w_n * w_m > 0.0, np.maximum(q, 0.0), 0.0)


def discord_excited_closed(w_n, w_m):
    """Pairwise discord of the excited-site family: min over the measured mode.

    Vanishes whenever either weight vanishes.  Accepts scalars or arrays.
    """
    q = np.minimum(_discord_side_excited(w_n, w_m), _discord_side_excited(w_m, w_n))
    return float(q) if q.ndim == 0 else q


def discord_excited_sides(w_n, w_m):
    """Both one-sided discords (measurement on m, measurement on n)."""
    return _discord_side_excited(w_n, w_m), _discord_side_excited(w_m, w_n)


def _discord_side_polarized(j_n, j_m):
    j_n = np.asarray(j_n, dtype=float)
    j_m = np.asarray(j_m, dtype=float)
    s = j_n + j_m
    g = np.sqrt(j_m * s)
    q = -0.5 * (xlog2x(1.0 - 2.0 * j_n) + xlog2x(1.0 + 2.0 * j_n)
                - xlog2x(1.0 - 2.0 * s) - xlog2x(1.0 + 2.0 * s)
                + xlog2x(1.0 - 2.0 * g) + xlog2x(1.0 + 2.0 * g))
    return np.where(j_n * j_m > 0.0, np.maximum(q, 0.0), 0.0)


def discord_polarized_closed(j_n, j_m):
    """Pairwise discord of the polarized-site family in terms of J_nn, J_mm."""
    q = np.minimum(_discord_side_polarized(j_n, j_m), _discord_side_polarized(j_m, j_n))
    return float(q) if q.ndim == 0 else q


def discord_polarized_sides(j_n, j_m):
    return _discord_side_polarized(j_n, j_m), _discord_side_polarized(j_m, j_n)


def discord_xstate(state) -> float:
    """Discord of a constructed X-state, computed from its matrix elements.

    Uses the optimal transverse measurement shared by both state families:
    measuring qubit B with an equatorial axis leaves qubit A with Bloch
    length sqrt(4|z|^2 + r_zA^2), so

        Q_B = S(rho_B) - S(rho) + S_cond(A),

    mirrored for the other side, and the result is the minimum.  The phase of
    the coherence z drops out exactly; this is the stationarity mechanism.
    Valid for the two families built by :func:`reduced_xstate` (transverse
    optimality is established there), not for arbitrary X-states.
    """
    rho = _as_matrix(state)
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -PSD_TOL:
        raise StateValidityError(f"negative eigenvalue {evals.min():.3e}")
    s_total = -np.sum(xlog2x(np.clip(evals, 0.0, None)))
    a, b, c, f = np.real(np.diagonal(rho))
    z2 = abs(rho[1, 2]) ** 2
    s_first = binary_entropy(a + b)      # marginal of qubit A
    s_second = binary_entropy(a + c)     # marginal of qubit B
    theta_first = np.sqrt(4.0 * z2 + (a + b - c - f) ** 2)
    theta_second = np.sqrt(4.0 * z2 + (a + c - b - f) ** 2)
    q_measure_second = s_second - s_total + _bloch_entropy(theta_first)
    q_measure_first = s_first - s_total + _bloch_entropy(theta_second)
    if z2 == 0.0:
        return 0.0
    return float(max(0.0, min(q_measure_first, q_measure_second)))


# ---------------------------------------------------------------------------
# measurement-grid oracle


def _measurement_vectors(theta: np.ndarray, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal measurement bases for a grid of Bloch angles, shape (G, 2)."""
    t, p = np.meshgrid(theta, phi, indexing="ij")
    t = t.ravel()
    p = p.ravel()
    v0 = np.stack([np.cos(t / 2.0), np.exp(1j * p) * np.sin(t / 2.0)], axis=-1)
    v1 = np.stack([np.sin(t / 2.0), -np.exp(1j * p) * np.cos(t / 2.0)], axis=-1)
    return v0, v1


def _conditional_entropy_grid(rho4: np.ndarray, v0: np.ndarray, v1: np.ndarray,
                              measured: int) -> np.ndarray:
    """Average post-measurement entropy of the unmeasured qubit on an angle grid."""
    if measured == 1:
        contracted = rho4.transpose(1, 3, 0, 2)  # (a, b, i, j)
    else:
        contracted = rho4.transpose(0, 2, 1, 3)  # (i, j, a, b)
    flat = contracted.reshape(2, 8)
    out = 0.0
    for v in (v0, v1):
        # block[g] = sum_ab conj(v_a) rho[.a.b] v_b as two contractions
        partial = (v.conj() @ flat).reshape(-1, 2, 4)
        block = np.sum(partial * v[:, :, None], axis=1).reshape(-1, 2, 2)
        x = np.real(block[:, 0, 0])
        y = np.real(block[:, 1, 1])
        p = x + y
        half_gap = np.sqrt(((x - y) / 2.0) ** 2 + np.abs(block[:, 0, 1]) ** 2)
        upper = (x + y) / 2.0 + half_gap
        lower = (x + y) / 2.0 - half_gap
        with np.errstate(divide="ignore", invalid="ignore"):
            q0 = np.where(p > 1e-15, np.clip(upper / np.where(p > 0, p, 1.0), 0.0, 1.0), 0.0)
            q1 = np.where(p > 1e-15, np.clip(lower / np.where(p > 0, p, 1.0), 0.0, 1.0), 0.0)
        entropy = -(xlog2x(q0) + xlog2x(q1))
        out = out + np.where(p > 1e-15, p * entropy, 0.0)
    return out


def _min_conditional_entropy(rho4: np.ndarray, measured: int, grid_size: int) -> float:
    theta = np.linspace(0.0, np.pi, grid_size)
    phi = np.linspace(0.0, 2.0 * np.pi, grid_size, endpoint=False)
    v0, v1 = _measurement_vectors(theta, phi)
    values = _conditional_entropy_grid(rho4, v0, v1, measured)
    best = int(np.argmin(values))
    best_theta = theta[best // grid_size]
    best_phi = phi[best % grid_size]
    # one refinement pass in a +-1-cell window around the coarse minimum
    dt = np.pi / (grid_size - 1)
    dp = 2.0 * np.pi / grid_size
    theta_fine = np.linspace(max(0.0, best_theta - dt), min(np.pi, best_theta + dt), grid_size)
    phi_fine = np.linspace(best_phi - dp, best_phi + dp, grid_size)
    v0, v1 = _measurement_vectors(theta_fine, phi_fine)
    fine = _conditional_entropy_grid(rho4, v0, v1, measured)
    return float(min(values[best], fine.min()))


def discord_measurement_oracle(state, grid_size: int = DEFAULT_GRID) -> float:
    """Discord from brute-force minimization over projective measurements.

    Scans one-qubit von Neumann measurements parameterized by two Bloch
    angles on a uniform grid (plus one local refinement pass), measures each
    qubit in turn, and returns the smaller discord.  Independent of every
    closed form above, including the minimizing-axis choice.
    """
    if grid_size < 64:
        raise ValueError("grid_size must be at least 64")
    rho = _as_matrix(state)
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -PSD_TOL:
        raise StateValidityError(f"negative eigenvalue {evals.min():.3e}")
    s_total = -np.sum(xlog2x(np.clip(evals, 0.0, None)))
    rho4 = rho.reshape(2, 2, 2, 2)
    rho_first = np.trace(rho4, axis1=1, axis2=3)
    rho_second = np.trace(rho4, axis1=0, axis2=2)
    s_first = -np.sum(xlog2x(np.clip(np.linalg.eigvalsh(rho_first), 0.0, None)))
    s_second = -np.sum(xlog2x(np.clip(np.linalg.eigvalsh(rho_second), 0.0, None)))
    q_measure_second = s_second - s_total + _min_conditional_entropy(rho4, 1, grid_size)
    q_measure_first = s_first - s_total + _min_conditional_entropy(rho4, 0, grid_size)
    return float(max(0.0, min(q_measure_first, q_measure_second)))


# ---------------------------------------------------------------------------
# measurement-parameter sweep for the excited family


@dataclass(frozen=True)
class EtaSweepReport:
    """Grid sweep of the one-parameter measurement family for one weight pair."""

    etas: np.ndarray
    f_values: np.ndarray
    argmin_index: int
    argmin_eta: float
    endpoint_identities: dict[str, tuple[float, float]]

    @property
    def max_endpoint_error(self) -> float:
        return max(abs(got - want) for got, want in self.endpoint_identities.values())


def _eta_probabilities_angles(eta, w_n, w_m):
    """Outcome probabilities p_i and conditional Bloch lengths theta_i."""
    eta = np.asarray(eta, dtype=float)
    p = np.stack([0.5 * (1.0 + eta * (1.0 - 2.0 * w_n)),
                  0.5 * (1.0 - eta * (1.0 - 2.0 * w_n))])
    signs = np.array([1.0, -1.0]).reshape(2, *([1] * eta.ndim))
    bracket = ((1.0 - eta**2) * w_n * w_m
               + 0.25 * (1.0 - 2.0 * w_m + signs * eta * (1.0 - 2.0 * (w_n + w_m))) ** 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        theta = np.where(p > 0.0, np.sqrt(np.clip(bracket, 0.0, None)) / np.where(p > 0, p, 1.0), 0.0)
    return p, np.clip(theta, 0.0, 1.0)


def verify_eta_minimum(w_n: float, w_m: float, grid_size: int = 1001) -> EtaSweepReport:
    """Sweep the measurement parameter eta over [0, 1] for an excited pair.

    Evaluates the average conditional entropy f(eta) = p0 S0 + p1 S1 on a
    uniform grid, reports where the grid minimum sits, and evaluates the
    endpoint identities p_i(0) = 1/2, theta_i(0) = 2 sqrt(w_n w_m +
    (1 - 2 w_m)^2 / 4), p_0(1) = 1 - w_n, theta_0(1) = |1 - 2 w_m - w_n| /
    (1 - w_n) and theta_1(1) = 1.  The minimum is reported, not assumed.
    """
    if w_n * w_m <= 0.0:
        raise ValueError("both weights must be positive for the sweep")
    etas = np.linspace(0.0, 1.0, grid_size)
    p, theta = _eta_probabilities_angles(etas, w_n, w_m)
    f_values = np.sum(p * _bloch_entropy(theta), axis=0)
    argmin_index = int(np.argmin(f_values))
    p0_ref, theta0_ref = _eta_probabilities_angles(np.array(0.0), w_n, w_m)
    p1_ref, theta1_ref = _eta_probabilities_angles(np.array(1.0), w_n, w_m)
    identities = {
        "p0_at_0": (float(p0_ref[0]), 0.5),
        "p1_at_0": (float(p0_ref[1]), 0.5),
        "theta0_at_0": (float(theta0_ref[0]),
                        2.0 * np.sqrt(w_n * w_m + 0.25 * (1.0 - 2.0 * w_m) ** 2)),
        "theta1_at_0": (float(theta0_ref[1]),
                        2.0 * np.sqrt(w_n * w_m + 0.25 * (1.0 - 2.0 * w_m) ** 2)),
        "p0_at_1": (float(p1_ref[0]), 1.0 - w_n),
        "theta0_at_1": (float(theta1_ref[0]),
                        abs(1.0 - 2.0 * w_m - w_n) / (1.0 - w_n)),
        "theta1_at_1": (float(theta1_ref[1]), 1.0),
    }
    return EtaSweepReport(etas=etas, f_values=f_values, argmin_index=argmin_index,
                          argmin_eta=float(etas[argmin_index]),
                          endpoint_identities=identities)


# ---------------------------------------------------------------------------
# full pairwise matrices


def correlation_matrix(profile: StationaryProfile, measure: str,
                       method: str = "closed", grid_size: int = DEFAULT_GRID,
                       threads: int = 1) -> np.ndarray:
    """N x N matrix of a pairwise measure over all mode pairs, zero diagonal.

    ``measure`` is ``discord`` or ``concurrence``; ``method`` selects the
    closed form or the independent oracle (grid-minimized discord, spin-flip
    concurrence).  Concurrence of the polarized family always goes through
    the spin-flip evaluation since there is no simpler exact expression.
    Output is deterministic and independent of the evaluation order.
    """
    if measure not in ("discord", "concurrence"):
        raise ValueError(f"unknown measure {measure!r}")
    if method not in ("closed", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    w = profile.weights
    n = profile.n_modes
    if measure == "discord" and method == "closed":
        w1 = w[:, None]
        w2 = w[None, :]
        if profile.kind == "excited":
            matrix = discord_excited_closed(w1, w2)
        else:
            matrix = discord_polarized_closed(w1, w2)
        np.fill_diagonal(matrix, 0.0)
        return matrix
    if measure == "concurrence" and method == "closed" and profile.kind == "excited":
        matrix = concurrence_excited(w[:, None], w[None, :])
        np.fill_diagonal(matrix, 0.0)
        return matrix

    def pair_value(pair):
        i, k = pair
        state = reduced_xstate(profile, i + 1, k + 1)
        if measure == "concurrence":
            return concurrence_wootters(state)
        return discord_measurement_oracle(state, grid_size=grid_size)

    pairs = [(i, k) for i in range(n) for k in range(i + 1, n)]
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(pair_value, pairs))
    else:
        values = [pair_value(p) for p in pairs]
    matrix = np.zeros((n, n))
    for (i, k), value in zip(pairs, values):
        matrix[i, k] = matrix[k, i] = value
    return matrix
