"""Bound states of a hydrogen atom in quantum plasma under Aharonov-Bohm flux,
magnetic and electric fields (atomic units).

Thin wrapper around the compiled extension module.
"""

import os

try:
    from ._plasmah import *  # noqa: F401,F403  (installed package layout)
    from . import _plasmah as _ext
except ImportError:  # in-tree build: extension sits on sys.path
    from _plasmah import *  # noqa: F401,F403
    import _plasmah as _ext

__all__ = [name for name in dir(_ext) if not name.startswith("_")]
__version__ = "0.1.0"


def packaged_data_file():
    """Path of the reference-table data file bundled with the package, or the
    PLASMAH_DATA_FILE override when set."""
    env = os.environ.get("PLASMAH_DATA_FILE")
    if env:
        return env
    here = os.path.dirname(os.path.abspath(__file__))
    candidate = os.path.join(here, "data", "reference_tables.csv")
    if os.path.exists(candidate):
        return candidate
    return _ext.default_data_file()
