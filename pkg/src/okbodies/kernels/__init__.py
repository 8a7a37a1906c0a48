"""Hot-kernel backend selection: compiled extension when available, pure Python otherwise.

Set ``OKBODIES_PURE=1`` in the environment (before import) to force the pure
backend; :func:`use` switches backends at runtime (used by the benchmark).
Both backends produce bit-identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

_impl = _pykernels
if not os.environ.get("OKBODIES_PURE"):
    try:
        from . import _fastkernels as _impl  # type: ignore[no-redef]
    except ImportError:
        pass


def use(name: str) -> str:
    """Select a backend by name ("pure", "cython" or "auto"); returns the active one."""
    global _impl
    if name == "pure":
        _impl = _pykernels
    elif name == "cython":
        from . import _fastkernels

        _impl = _fastkernels
    elif name == "auto":
        try:
            from . import _fastkernels

            _impl = _fastkernels
        except ImportError:
            _impl = _pykernels
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    return backend_name()


def backend_name() -> str:
    return _impl.BACKEND


def pairing_many(v, gens):
    return _impl.pairing_many(v, gens)


def simplex_solve(cols, b, obj):
    return _impl.simplex_solve(cols, b, obj)


OPTIMAL = _pykernels.OPTIMAL
INFEASIBLE = _pykernels.INFEASIBLE
UNBOUNDED = _pykernels.UNBOUNDED
