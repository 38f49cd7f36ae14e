"""Integrator backend selection: compiled Cython core when available, with a
pure-Python twin as fallback.  Override with SPECDET_BACKEND={c,py}."""
from __future__ import annotations

import os
from types import ModuleType

_backend: ModuleType | None = None
_name = "unselected"


def _select() -> ModuleType:
    global _backend, _name
    if _backend is not None:
        return _backend
    want = os.environ.get("SPECDET_BACKEND", "").strip().lower()
    if want not in ("", "c", "py"):
        raise ValueError(f"SPECDET_BACKEND must be 'c' or 'py', got {want!r}")
    if want in ("", "c"):
        try:
            from . import _kernel_c as kern
            _backend, _name = kern, "c"
            return kern
        except ImportError:
            if want == "c":
                raise
    from . import _kernel_py as kern
    _backend, _name = kern, "py"
    return kern


def get_backend() -> ModuleType:
    return _select()


def backend_name() -> str:
    _select()
    return _name
