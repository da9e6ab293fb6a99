"""Scan-based navigation and exploration for disk robots in polygonal worlds."""

try:
    from ._scannav import *  # noqa: F401,F403
    from ._scannav import __doc__ as _core_doc
except ImportError:  # pragma: no cover - build-tree layout
    from _scannav import *  # noqa: F401,F403
    from _scannav import __doc__ as _core_doc

__version__ = "0.1.0"
