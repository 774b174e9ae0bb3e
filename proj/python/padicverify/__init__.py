"""Python bindings for the p-adic verification library."""

import os
import sys

try:
    from ._padicverify import (
        gamma,
        gauss_valuation,
        l_values,
        teichmuller,
        unit_log,
        verify_csv,
        verify_json,
    )
except ImportError:
    _ext_dir = os.environ.get("PADICVERIFY_EXT_DIR")
    if _ext_dir and _ext_dir not in sys.path:
        sys.path.insert(0, _ext_dir)
    from _padicverify import (
        gamma,
        gauss_valuation,
        l_values,
        teichmuller,
        unit_log,
        verify_csv,
        verify_json,
    )

__all__ = [
    "gamma",
    "gauss_valuation",
    "l_values",
    "teichmuller",
    "unit_log",
    "verify_csv",
    "verify_json",
]
