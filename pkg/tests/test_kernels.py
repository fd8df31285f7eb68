import os
import subprocess
import sys

import numpy as np
import pytest

from udc import kernels


def _case(rng, n, strips):
    sizes = rng.multinomial(n, np.ones(strips) / strips)
    starts = np.concatenate(([0], np.cumsum(sizes))).astype(np.int64)
    lo = np.round(rng.uniform(-10, 10, n), 1)  # rounding forces ties
    hi = lo + rng.uniform(0, 2, n)
    return lo, hi, starts


def test_backends_agree(rng):
    for n in (0, 1, 5, 500, 20000):
        lo, hi, starts = _case(rng, n, 7)
        results = [kernels.BACKENDS[b](lo, hi, starts) for b in sorted(kernels.BACKENDS)]
        for r in results[1:]:
            assert np.array_equal(r, results[0])
        assert results[0].dtype == np.int64


def test_scan_semantics(backend):
    scan = kernels.BACKENDS[backend]
    lo = np.array([0.0, -3.0, 4.0, 1.0, 1.0])
    hi = np.array([10.0, -2.0, 5.0, 2.0, 3.0])
    starts = np.array([0, 3, 3, 5], dtype=np.int64)
    # strip 0: stab at 4 also hits [0,10]; [-3,-2] needs its own; empty strip 1; strip 2 tie goes to the first position
    assert scan(lo, hi, starts).tolist() == [2, 1, 3]
    with pytest.raises(ValueError):
        scan(lo, hi[:2], starts)
    with pytest.raises(ValueError):
        scan(lo, hi, np.array([0, 4], dtype=np.int64))
    with pytest.raises(ValueError):
        scan(lo, hi, np.array([0, 3, 2, 5], dtype=np.int64))


def test_env_forces_fallback():
    env = dict(os.environ, UDC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import udc; print(udc.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_compiled_backend_built():
    # the editable install builds the extension; fail loudly if the fast path silently vanished
    assert "cython" in kernels.BACKENDS
