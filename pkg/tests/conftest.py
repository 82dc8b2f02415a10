import pytest

from spectra import DEMO_SAMPLING, DEMO_SIGNALS, dft_oracle, magnitude_spectrum, synthesize


@pytest.fixture(scope="session")
def demo_spectra():
    """Fast-path spectra of the five bundled test signals."""
    return {
        name: magnitude_spectrum(synthesize(spec, DEMO_SAMPLING))
        for name, spec in DEMO_SIGNALS.items()
    }


@pytest.fixture(scope="session")
def oracle_spectra():
    """Direct-summation spectra of the same signals (the ground-truth route)."""
    return {
        name: dft_oracle(synthesize(spec, DEMO_SAMPLING))
        for name, spec in DEMO_SIGNALS.items()
    }
