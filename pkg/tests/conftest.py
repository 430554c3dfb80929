"""Session fixtures.

The full-depth census backs several acceptance criteria and a couple of
regular tests; it runs once, single-threaded so that its wall time can
be held against the runtime budget.
"""

import time

import pytest

from sgcensus.census import CensusConfig, run_census


@pytest.fixture(scope="session")
def census25():
    """(rows, seconds) for a single-threaded census through genus 25."""
    cfg = CensusConfig(g_max=25, threads=1)
    start = time.perf_counter()
    rows = run_census(cfg)
    elapsed = time.perf_counter() - start
    return rows, elapsed
