import math

import numpy as np
import pytest

from udc import kernels

SQRT3 = math.sqrt(3.0)


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20141015)
