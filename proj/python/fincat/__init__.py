"""Finite category theory workbench.

Thin wrapper over the compiled extension. All structured inputs are the same
JSON documents the ``fincat`` command-line tool reads; see the ``schemas/``
directory of the source tree for the formats.
"""

try:
    from ._fincat import *  # noqa: F401,F403  (installed package layout)
    from . import _fincat as _impl
except ImportError:  # build-tree layout: extension next to the package
    from _fincat import *  # noqa: F401,F403
    import _fincat as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
