"""Shared test configuration.

The package's numerical routines read the global mpmath precision, so every
test runs inside a guard that restores the precision it found; a test that
raises mid-way through a precision change cannot poison its neighbours.
"""

from __future__ import annotations

import pytest
from mpmath import mp


@pytest.fixture(autouse=True)
def _restore_precision():
    saved = mp.dps
    try:
        yield
    finally:
        mp.dps = saved
