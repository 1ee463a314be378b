import numpy as np
import pytest

from thetarel import EvalSettings, PeriodMatrix, TrialSampler


@pytest.fixture
def settings():
    return EvalSettings()


@pytest.fixture
def tau_i():
    return PeriodMatrix(np.array([[1j]]))


@pytest.fixture
def sampled_taus():
    """Ten deterministic genus-1 periods from the default sampler window."""
    sampler = TrialSampler(seed=20240811)
    rng = sampler.make_rng()
    return [sampler.draw_tau(rng, 1) for _ in range(10)]
