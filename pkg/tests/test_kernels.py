import subprocess
import sys

import numpy as np
import pytest
from scipy.special import sph_harm_y

from rp2quant._kernels import (
    HAVE_NUMBA,
    backend_name,
    ylm_basis,
    ylm_basis_numba,
    ylm_basis_numpy,
)


def random_points(rng, n):
    pts = rng.normal(size=(n, 3))
    return pts / np.linalg.norm(pts, axis=1)[:, None]


class TestNumpyPath:
    def test_against_scipy(self, rng):
        pts = random_points(rng, 40)
        theta = np.arccos(pts[:, 2])
        phi = np.arctan2(pts[:, 1], pts[:, 0])
        basis = ylm_basis_numpy(pts, 10)
        for l in range(11):
            for m in range(-l, l + 1):
                ref = sph_harm_y(l, m, theta, phi)
                assert np.max(np.abs(basis[:, l * l + l + m] - ref)) < 1e-12

    def test_poles(self):
        basis = ylm_basis_numpy(np.array([[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]]), 3)
        # only m = 0 survives at the poles
        for l in range(4):
            for m in range(-l, l + 1):
                col = basis[:, l * l + l + m]
                if m != 0:
                    assert np.max(np.abs(col)) == 0.0


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba unavailable")
class TestNumbaPath:
    def test_matches_numpy_path(self, rng):
        for n in (3, 100, 3000):     # crosses the serial/parallel threshold
            pts = random_points(rng, n)
            gap = ylm_basis_numba(pts, 8) - ylm_basis_numpy(pts, 8)
            assert np.max(np.abs(gap)) < 1e-14

    def test_default_dispatch(self):
        assert backend_name() in ("numba", "numpy")


class TestEnvFlag:
    def test_disable_flag_selects_numpy(self):
        code = (
            "import os; os.environ['RP2QUANT_NO_NUMBA'] = '1'; "
            "from rp2quant._kernels import backend_name; print(backend_name())"
        )
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, check=True
        )
        assert out.stdout.strip() == "numpy"

    def test_flag_off_prefers_numba(self):
        code = (
            "import os; os.environ.pop('RP2QUANT_NO_NUMBA', None); "
            "from rp2quant._kernels import backend_name, HAVE_NUMBA; "
            "print(backend_name() == ('numba' if HAVE_NUMBA else 'numpy'))"
        )
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, check=True
        )
        assert out.stdout.strip() == "True"

    def test_results_agree_across_backends(self, rng):
        # the flag only swaps implementations; both satisfy the same contract
        pts = random_points(rng, 64)
        a = ylm_basis(pts, 6)
        b = ylm_basis_numpy(pts, 6)
        assert np.max(np.abs(a - b)) < 1e-14
