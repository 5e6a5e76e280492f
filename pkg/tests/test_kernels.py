from __future__ import annotations

import os
import subprocess
import sys

from wreathvo import _kernels_py, kernels


def test_python_backend_always_available():
    assert "python" in kernels.available_backends()


def test_env_var_forces_fallback():
    code = "from wreathvo import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, WREATHVO_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_mulmod_matches_reference(backend):
    # Q(zeta_5): phi = 1 + z + z^2 + z^3 + z^4, reduce z^4 = -(1 + z + z^2 + z^3)
    from wreathvo.scalar import _field

    f = _field(5)
    a = (1, 2, 0, -1)
    b = (0, 1, 1, 3)
    got = kernels.mulmod(a, b, len(a), f.red_hi, f.red_flat, f.maxred)
    want = _kernels_py.mulmod(a, b, len(a), f.red_hi, f.red_flat, f.maxred)
    assert list(got) == list(want)


def test_reduce_exponents_matches_reference(backend):
    from wreathvo.scalar import _field

    f = _field(12)
    terms = [(0, 3), (5, -2), (11, 7), (4, 1)]
    got = kernels.reduce_exponents(terms, f.phi, f.red_all)
    assert tuple(got) == _kernels_py.reduce_exponents(terms, f.phi, f.red_all)
