"""Diagonalization of the single-excitation Hamiltonian.

The numerical path is a cyclic Jacobi eigensolver for dense real symmetric
matrices; it is deterministic, which matters here because mode labels carry
physical meaning in all downstream pairwise quantities.  Two closed-form
decompositions are provided as references: the homogeneous chain and the
vanishing-dimerization limit of the alternating chain.

Conventions (applied uniformly so that mode k always means the same thing):
  * eigenvalues sorted in strictly descending order,
  * degenerate groups (gap below ``degeneracy_tol``) ordered by the site index
    of the first significant eigenvector component,
  * the first component of each mode exceeding 1e-12 in magnitude is positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SIGN_TOL = 1e-12
DEGENERACY_TOL = 1e-9
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi iteration fails to reach its off-diagonal target."""


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues and orthonormal eigenmodes of a real symmetric Hamiltonian.

    ``modes[k - 1, j - 1]`` is the component of eigenmode k on site j
    (both labels 1-based in the interface, rows are modes).
    """

    eigenvalues: np.ndarray
    modes: np.ndarray

    @property
    def n_modes(self) -> int:
        return len(self.eigenvalues)

    def site_amplitudes(self, j: int) -> np.ndarray:
        """Components of every mode on site j (1-based)."""
        if not 1 <= j <= self.n_modes:
            raise ValueError(f"site index {j} outside 1..{self.n_modes}")
        return self.modes[:, j - 1]


def jacobi_eigh(a: np.ndarray, off_tol: float = JACOBI_OFF_TOL,
                max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Returns ``(eigenvalues, vecs)`` with eigenvectors in the columns of
    ``vecs``, unordered.  Convergence is declared when the Frobenius norm of
    the off-diagonal part drops below ``off_tol``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    a = (a + a.T) / 2.0
    v = np.eye(n)
    if n == 1:
        return np.diagonal(a).copy(), v

    def offnorm(m):
        return np.linalg.norm(m - np.diag(np.diagonal(m)))

    for _ in range(max_sweeps):
        if offnorm(a) < off_tol:
            return np.diagonal(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue  # keeps exactly decoupled blocks decoupled
                with np.errstate(over="ignore"):
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if not np.isfinite(theta) or abs(theta) > 1e150:
                    t = 0.0  # apq is denormal; zeroing it below is exact here
                elif theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                a[:, p] = new_p
                a[p, :] = new_p
                a[:, q] = new_q
                a[q, :] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    if offnorm(a) < off_tol:
        return np.diagonal(a).copy(), v
    raise ConvergenceError(
        f"Jacobi iteration did not converge in {max_sweeps} sweeps "
        f"(off-diagonal norm {offnorm(a):.3e})"
    )


def _first_significant(row: np.ndarray, tol: float = SIGN_TOL) -> int:
    idx = np.flatnonzero(np.abs(row) > tol)
    return int(idx[0]) if idx.size else len(row)


def _canonical_order(eigenvalues: np.ndarray, modes: np.ndarray,
                     degeneracy_tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Sort descending; break near-degenerate ties by first significant site."""
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    modes = modes[order]
    start = 0
    for stop in range(1, len(eigenvalues) + 1):
        if stop < len(eigenvalues) and eigenvalues[stop - 1] - eigenvalues[stop] < degeneracy_tol:
            continue
        if stop - start > 1:
            keys = [_first_significant(modes[i]) for i in range(start, stop)]
            sub = np.argsort(keys, kind="stable") + start
            eigenvalues[start:stop] = eigenvalues[sub]
            modes[start:stop] = modes[sub]
        start = stop
    return eigenvalues, modes


def _fix_signs(modes: np.ndarray) -> np.ndarray:
    for row in modes:
        k = _first_significant(row)
        if k < len(row) and row[k] < 0:
            row *= -1.0
    return modes


def diagonalize(h: np.ndarray, degeneracy_tol: float = DEGENERACY_TOL) -> SpectralDecomposition:
    """Diagonalize a symmetric single-excitation Hamiltonian.

    Deterministic for identical input: the Jacobi sweep order is fixed and the
    ordering/sign conventions pin the output representation.
    """
    eigenvalues, vecs = jacobi_eigh(h)
    modes = vecs.T.copy()  # rows become modes
    eigenvalues, modes = _canonical_order(eigenvalues, modes, degeneracy_tol)
    modes = _fix_signs(modes)
    return SpectralDecomposition(eigenvalues=eigenvalues, modes=modes)


def analytic_homogeneous(n_sites: int) -> SpectralDecomposition:
    """Closed-form decomposition of the homogeneous nearest-neighbor chain.

    eps_k = cos(pi k / (N+1)) and mode components
    sqrt(2/(N+1)) sin(pi k j / (N+1)), k, j = 1..N.
    """
    if n_sites < 2:
        raise ValueError("need at least two sites")
    n = n_sites
    k = np.arange(1, n + 1)
    eigenvalues = np.cos(np.pi * k / (n + 1))
    modes = np.sqrt(2.0 / (n + 1)) * np.sin(np.pi * np.outer(k, k) / (n + 1))
    return SpectralDecomposition(eigenvalues=eigenvalues, modes=modes)


def analytic_alternating_limit(n_sites: int, d1: float = 1.0) -> SpectralDecomposition:
    """Vanishing-dimerization limit of the odd-length alternating chain.

    With even bonds switched off the chain decouples into dimers plus one
    isolated end site: (N-1)/2 eigenvalues +d1/2, a zero mode localized on the
    last site, and (N-1)/2 eigenvalues -d1/2.  The mode shapes are the limits
    of the finite-dimerization eigenvectors, not bare dimer states, so they
    stay spread over the whole chain; each one is renormalized to unit length
    (only squared components enter downstream weights).
    """
    if n_sites < 2 or n_sites % 2 == 0:
        raise ValueError("the dimer limit is defined for odd n_sites only")
    if d1 <= 0:
        raise ValueError("d1 must be positive")
    n = n_sites
    half = (n - 1) // 2
    center = half  # 0-based row of the zero mode
    eigenvalues = np.concatenate([
        np.full(half, d1 / 2.0), [0.0], np.full(half, -d1 / 2.0),
    ])
    modes = np.zeros((n, n))
    j = np.arange(1, n + 1)
    odd = j % 2 == 1
    for row in range(n):
        if row == center:
            modes[row, n - 1] = 1.0
            continue
        k = row + 1
        sign = 1.0 if row < center else -1.0  # d1 / lambda_k for lambda_k = +-d1
        comp = np.sqrt(2.0 / (n + 1)) * np.sin(np.pi * k * j / (n + 1))
        comp_shift = np.sqrt(2.0 / (n + 1)) * np.sin(np.pi * k * (j + 1) / (n + 1))
        modes[row] = np.where(odd, sign * comp_shift, comp)
        modes[row] /= np.linalg.norm(modes[row])
    return SpectralDecomposition(eigenvalues=eigenvalues, modes=modes)
