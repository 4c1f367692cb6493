import numpy as np
import pytest

from csrgame.model import example_params


@pytest.fixture
def params():
    return example_params()


def random_params(rng, T=None):
    """Draw from the ranges the equivalence property is stated over."""
    return example_params().replace(
        alpha=rng.uniform(0.1, 0.95),
        beta1=rng.uniform(0, 1), beta2=rng.uniform(0, 1), beta3=rng.uniform(0, 1),
        delta=rng.uniform(0, 0.5), delta_hat=rng.uniform(0, 0.5),
        delta_hathat=rng.uniform(0, 0.5),
        tau=rng.uniform(0.05, 0.5), theta=rng.uniform(0.001, 0.05),
        d=rng.uniform(0, 1), d_hat=rng.uniform(0, 1),
        T=int(rng.integers(1, 51)) if T is None else T,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)
