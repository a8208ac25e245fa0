import pytest

from graphenergy import graphcore, spectral


@pytest.fixture(scope="session")
def paley_spectra_200():
    """Eigensolver spectra for every valid Paley prime up to 200."""
    return {
        p: spectral.eigenvalues(graphcore.paley(p))
        for p in graphcore.paley_primes(5, 200)
    }


@pytest.fixture(scope="session")
def ring_spectra_12():
    """Eigensolver spectra for the ring of cliques, q = 3..12."""
    return {
        q: spectral.eigenvalues(graphcore.ring_of_cliques(q))
        for q in range(3, 13)
    }


@pytest.fixture(scope="session")
def paley_spectrum_401():
    return spectral.eigenvalues(graphcore.paley(401))
