import numpy as np
import pytest

from algconn.spectral import SymMatrix, eigen_sym


@pytest.fixture(scope="session", autouse=True)
def warm_eigensolver():
    """Trigger kernel compilation once so timed tests measure the algorithm."""
    eigen_sym(SymMatrix.from_array(np.array([[2.0, -1.0], [-1.0, 2.0]])))
