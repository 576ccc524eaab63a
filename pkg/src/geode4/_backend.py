"""Kernel backend selection.

Two interchangeable kernel modules exist: ``_kernels`` (compiled) and
``_py_kernels`` (pure Python).  They produce bit-identical results; the
compiled one is just faster.  Selection happens once at import:

* ``GEODE4_BACKEND=py`` or ``GEODE4_BACKEND=cext`` forces a backend
  (forcing cext fails loudly if the extension is missing);
* otherwise the compiled backend is used when available, with a silent
  fall back to pure Python.
"""

import os


def get_kernels(name):
    """Kernel module for an explicit backend name ('py', 'cext', 'auto')."""
    if name == "py":
        from . import _py_kernels

        return _py_kernels
    if name == "cext":
        from . import _kernels

        return _kernels
    if name == "auto":
        return kernels
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    """Backend names usable in this installation, fastest first."""
    names = []
    try:
        get_kernels("cext")
        names.append("cext")
    except ImportError:
        pass
    names.append("py")
    return names


def _select():
    forced = os.environ.get("GEODE4_BACKEND", "").strip().lower()
    if forced:
        return get_kernels(forced)
    try:
        return get_kernels("cext")
    except ImportError:
        return get_kernels("py")


kernels = _select()

BACKEND_NAME = kernels.BACKEND_NAME
