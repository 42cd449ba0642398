"""Backend selection for the enumeration hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used. Both expose the same functions with
the same results. Arguments too large for 64-bit arithmetic always go to the
Python implementation.
"""
from __future__ import annotations

import logging

from . import _pykernels

log = logging.getLogger(__name__)

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

# Largest argument for which every intermediate stays below 2**62.
C_LIMIT = 1 << 20

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _ckernels if _ckernels is not None else _pykernels


def available_backends() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]


def set_backend(name: str) -> None:
    global BACKEND, _impl
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        _impl = _ckernels
    elif name == "python":
        _impl = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    log.debug("kernel backend set to %s", name)


def solve_params_raw(B: int) -> list[tuple[int, int, int]]:
    if B > C_LIMIT:
        return _pykernels.solve_params_raw(B)
    return _impl.solve_params_raw(B)


def oracle_completions(B: int, bound: int) -> list[tuple[int, int, int]]:
    if B > C_LIMIT or bound > C_LIMIT:
        return _pykernels.oracle_completions(B, bound)
    return _impl.oracle_completions(B, bound)
