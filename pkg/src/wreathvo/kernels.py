"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``WREATHVO_PURE_PYTHON=1`` to force the fallback (used by the test suite
and the benchmark to exercise both paths).
"""

from __future__ import annotations

import os

from wreathvo import _kernels_py

BACKEND = "python"
mulmod = _kernels_py.mulmod
reduce_exponents = _kernels_py.reduce_exponents

if not os.environ.get("WREATHVO_PURE_PYTHON"):
    try:
        from wreathvo import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        mulmod = _compiled.mulmod
        reduce_exponents = _compiled.reduce_exponents


def use_backend(name: str) -> None:
    """Switch kernels at runtime (``"python"`` or ``"cython"``)."""
    global BACKEND, mulmod, reduce_exponents
    if name == "python":
        mulmod = _kernels_py.mulmod
        reduce_exponents = _kernels_py.reduce_exponents
    elif name == "cython":
        from wreathvo import _kernels as _compiled

        mulmod = _compiled.mulmod
        reduce_exponents = _compiled.reduce_exponents
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    BACKEND = name


def available_backends() -> list[str]:
    names = ["python"]
    try:
        from wreathvo import _kernels  # noqa: F401
    except ImportError:
        return names
    names.append("cython")
    return names
