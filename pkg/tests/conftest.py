import numpy as np
import pytest


@pytest.fixture
def toy_h0():
    return np.array([1.0, 2.0, 3.0, 2.0, 1.0])


@pytest.fixture
def toy_h1():
    # unnormalized mate of toy_h0; transfer(toy_h0, toy_h1) = z^-3
    return np.array([-0.5, -1.0, -0.5])
