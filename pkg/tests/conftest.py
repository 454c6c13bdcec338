import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from kleinmetric.feshbach_villars import TwoComponentState  # noqa: E402
from kleinmetric.lattice import LatticeConfig, eigendecompose, kinetic_spectrum  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def small_config():
    return LatticeConfig(n=8, h=1.0, m=0.5)


@pytest.fixture
def small_spectrum(small_config):
    return kinetic_spectrum(small_config)


@pytest.fixture
def two_mode_spectrum():
    """K = diag(1, 4): energies ±1 and ±2."""
    return eigendecompose(np.diag([1.0, 4.0]))


@pytest.fixture
def make_state(rng):
    """Factory for random complex two-component states."""

    def _make(n: int) -> TwoComponentState:
        return TwoComponentState(
            upper=rng.standard_normal(n) + 1j * rng.standard_normal(n),
            lower=rng.standard_normal(n) + 1j * rng.standard_normal(n),
        )

    return _make
