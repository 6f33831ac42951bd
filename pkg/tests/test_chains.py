import numpy as np
import pytest

from xychain import ChainSpec, build_couplings, build_hamiltonian


def full_xy_hamiltonian(d):
    """Brute-force 2^N XY Hamiltonian sum d_ij (IxIx + IyIy) via tensor products."""
    n = d.shape[0]
    sx = np.array([[0.0, 0.5], [0.5, 0.0]])
    sy = np.array([[0.0, -0.5j], [0.5j, 0.0]])

    def site_op(op, site):
        mats = [np.eye(2)] * n
        mats[site] = op
        out = mats[0]
        for m in mats[1:]:
            out = np.kron(out, m)
        return out

    h = np.zeros((2**n, 2**n), dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] != 0.0:
                h += d[i, j] * (site_op(sx, i) @ site_op(sx, j)
                                + site_op(sy, i) @ site_op(sy, j))
    return h


def single_excitation_block(h_full, n):
    """Restrict the 2^N matrix to states with exactly one flipped spin."""
    idx = [1 << (n - 1 - site) for site in range(n)]
    return np.real(h_full[np.ix_(idx, idx)])


class TestChainSpec:
    def test_rejects_short_chain(self):
        with pytest.raises(ValueError, match="n_sites"):
            ChainSpec(1)

    def test_rejects_unknown_profile(self):
        with pytest.raises(ValueError, match="profile"):
            ChainSpec(5, "zigzag")

    def test_alternating_needs_delta(self):
        with pytest.raises(ValueError, match="delta"):
            ChainSpec(5, "alternating")
        with pytest.raises(ValueError, match="delta"):
            ChainSpec(5, "alternating", delta=-0.3)

    def test_three_alternating_needs_all_bonds(self):
        with pytest.raises(ValueError, match="d2"):
            ChainSpec(7, "three_alternating", d1=1.0, d3=0.25)

    def test_explicit_length_checked(self):
        with pytest.raises(ValueError, match="length"):
            ChainSpec(5, "explicit", couplings=(1.0, 2.0))
        with pytest.raises(ValueError, match="positive"):
            ChainSpec(3, "explicit", couplings=(1.0, -2.0))

    def test_positions_validated(self):
        with pytest.raises(ValueError, match="increasing"):
            ChainSpec(3, positions=(0.0, 2.0, 1.0))
        with pytest.raises(ValueError, match="unit spacing"):
            ChainSpec(3, positions=(0.0, 2.0, 3.0))

    def test_ddi_with_inhomogeneous_profile_needs_positions(self):
        with pytest.raises(ValueError, match="positions"):
            ChainSpec(5, "alternating", delta=0.5, interaction="all_pairs_ddi")
        # with a geometry it is accepted
        ChainSpec(3, "alternating", delta=0.5, interaction="all_pairs_ddi",
                  positions=(0.0, 1.0, 3.0))


class TestBuildCouplings:
    def test_homogeneous_nearest_neighbor(self):
        d = build_couplings(ChainSpec(41))
        off = np.diagonal(d, 1)
        assert np.all(off == 1.0)
        assert np.count_nonzero(d) == 2 * 40

    def test_ddi_inverse_cube(self):
        d = build_couplings(ChainSpec(41, interaction="all_pairs_ddi"))
        assert d[0, 2] == pytest.approx(1.0 / 8.0, abs=0)
        assert d[0, 3] == pytest.approx(1.0 / 27.0, abs=0)
        assert d[0, 1] == 1.0

    def test_cdel_bond_20(self):
        d = build_couplings(ChainSpec(41, "cdel"))
        assert d[19, 20] == pytest.approx(np.sqrt(20 * 21 / 40), rel=1e-15)
        assert d[0, 1] == pytest.approx(1.0, rel=1e-15)

    def test_three_alternating_pattern(self):
        d = build_couplings(ChainSpec(7, "three_alternating", d1=1.0, d2=0.5, d3=0.25))
        assert np.allclose(np.diagonal(d, 1), [1.0, 0.5, 0.25, 1.0, 0.5, 0.25])

    def test_alternating_pattern(self):
        d = build_couplings(ChainSpec(6, "alternating", delta=0.3))
        assert np.allclose(np.diagonal(d, 1), [1.0, 0.3, 1.0, 0.3, 1.0])

    def test_explicit_passthrough(self):
        d = build_couplings(ChainSpec(4, "explicit", couplings=(0.2, 3.0, 1.5)))
        assert np.allclose(np.diagonal(d, 1), [0.2, 3.0, 1.5])

    @pytest.mark.parametrize("spec", [
        ChainSpec(11),
        ChainSpec(11, "alternating", delta=0.1),
        ChainSpec(11, "three_alternating", d1=1.0, d2=0.5, d3=0.25),
        ChainSpec(11, "cdel"),
        ChainSpec(11, interaction="all_pairs_ddi"),
    ])
    def test_symmetry_and_nonnegativity(self, spec):
        d = build_couplings(spec)
        assert np.array_equal(d, d.T)
        assert np.all(d >= 0.0)
        assert np.all(np.diagonal(d) == 0.0)


class TestBuildHamiltonian:
    def test_half_coupling(self):
        h = build_hamiltonian(build_couplings(ChainSpec(2)))
        assert np.allclose(h, [[0.0, 0.5], [0.5, 0.0]])
        assert np.allclose(np.sort(np.linalg.eigvalsh(h)), [-0.5, 0.5])

    def test_zero_couplings(self):
        assert np.all(build_hamiltonian(np.zeros((4, 4))) == 0.0)

    def test_rejects_asymmetric(self):
        bad = np.array([[0.0, 1.0], [0.5, 0.0]])
        with pytest.raises(ValueError, match="symmetric"):
            build_hamiltonian(bad)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_full_hamiltonian_block_homogeneous(self, n):
        d = build_couplings(ChainSpec(n))
        h = build_hamiltonian(d)
        block = single_excitation_block(full_xy_hamiltonian(d), n)
        assert np.abs(h - block).max() < 1e-14

    def test_matches_full_hamiltonian_block_ddi(self):
        d = build_couplings(ChainSpec(4, interaction="all_pairs_ddi"))
        h = build_hamiltonian(d)
        block = single_excitation_block(full_xy_hamiltonian(d), 4)
        assert np.abs(h - block).max() < 1e-14

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_homogeneous_spectrum(self, n):
        h = build_hamiltonian(build_couplings(ChainSpec(n)))
        expected = np.sort(np.cos(np.pi * np.arange(1, n + 1) / (n + 1)))
        assert np.abs(np.sort(np.linalg.eigvalsh(h)) - expected).max() < 1e-12
