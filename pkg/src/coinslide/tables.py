"""Backend selection and caching for the brute-force value tables.

The compiled kernel (``_ctables``, Cython) is preferred; the pure numpy
kernel (``_pytables``) is the fallback.  ``COINSLIDE_BACKEND=python`` or
``=compiled`` forces the choice.  Cached tables grow geometrically and
are served read-only; both kernels fill identical tables (cross-checked
in the test suite), so cache reuse never changes a result.
"""

from __future__ import annotations

import os
import threading

import numpy as np

from .core import Variant
from . import _pytables

try:
    from . import _ctables
except ImportError:
    _ctables = None

_BACKENDS = {"python": _pytables}
if _ctables is not None:
    _BACKENDS["compiled"] = _ctables


def _pick_backend():
    forced = os.environ.get("COINSLIDE_BACKEND")
    if forced:
        if forced not in _BACKENDS:
            raise ImportError(
                f"COINSLIDE_BACKEND={forced!r} unavailable (choices: {sorted(_BACKENDS)})"
            )
        return forced
    return "compiled" if "compiled" in _BACKENDS else "python"


_ACTIVE = _pick_backend()
_impl = _BACKENDS[_ACTIVE]

_MIN_BOUND = 64

_lock = threading.Lock()
_two: dict[Variant, np.ndarray] = {}
_one: dict[Variant, np.ndarray] = {}


def backend() -> str:
    """Name of the kernel in use: "compiled" or "python"."""
    return _ACTIVE


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def raw_two_coin_table(bound: int, variant: Variant = Variant.A, backend_name: str | None = None) -> np.ndarray:
    """Uncached table straight from a kernel (for benchmarks and cross-checks)."""
    impl = _BACKENDS[backend_name] if backend_name else _impl
    return impl.two_coin_table(bound, variant is Variant.B)


def raw_one_coin_values(count: int, variant: Variant = Variant.A, backend_name: str | None = None) -> np.ndarray:
    impl = _BACKENDS[backend_name] if backend_name else _impl
    return impl.one_coin_values(count, variant is Variant.B)


def two_coin_table(bound: int, variant: Variant = Variant.A) -> np.ndarray:
    """Read-only value table covering at least 0 <= x < y <= bound.

    The returned array may be larger than asked; index it as [x, y].
    """
    with _lock:
        cur = _two.get(variant)
        if cur is None or cur.shape[0] <= bound:
            have = 0 if cur is None else cur.shape[0] - 1
            target = max(bound, 2 * have, _MIN_BOUND)
            arr = _impl.two_coin_table(target, variant is Variant.B)
            arr.setflags(write=False)
            _two[variant] = arr
        return _two[variant]


def one_coin_values(count: int, variant: Variant = Variant.A) -> np.ndarray:
    """Read-only One(r) values for at least r < count."""
    with _lock:
        cur = _one.get(variant)
        if cur is None or cur.shape[0] < count:
            have = 0 if cur is None else cur.shape[0]
            target = max(count, 2 * have, _MIN_BOUND)
            arr = _impl.one_coin_values(target, variant is Variant.B)
            arr.setflags(write=False)
            _one[variant] = arr
        return _one[variant]
