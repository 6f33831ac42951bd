import numpy as np
import pytest

from xychain import ChainSpec, build_chain, diagonalize


@pytest.fixture(scope="session")
def hom41():
    """Spectral decomposition of the homogeneous N=41 chain."""
    return diagonalize(build_chain(ChainSpec(41)))


@pytest.fixture(scope="session")
def chain_family_41():
    """One representative Hamiltonian per coupling family at N=41."""
    specs = {
        "homogeneous": ChainSpec(41),
        "homogeneous_ddi": ChainSpec(41, interaction="all_pairs_ddi"),
        "alternating": ChainSpec(41, "alternating", delta=0.5),
        "three_alternating": ChainSpec(41, "three_alternating", d1=1.0, d2=0.5, d3=0.25),
        "cdel": ChainSpec(41, "cdel"),
    }
    return {name: diagonalize(build_chain(spec)) for name, spec in specs.items()}


def random_simplex_pair(rng):
    """Uniform weight pair with w_n, w_m >= 0 and w_n + w_m <= 1."""
    a, b = rng.random(2)
    if a + b > 1.0:
        a, b = 1.0 - a, 1.0 - b
    return a, b
