import time

import pytest

from symeuclid import verify

ACCEPT_MAX_N = 10**4


@pytest.fixture(scope="session")
def roots_10k():
    """Square roots of -1 mod n for all n <= 10^4, plus build time.

    One linear scan per n; building it once keeps the exhaustive
    acceptance sweeps from repeating the most expensive step.
    """
    start = time.perf_counter()
    table = verify.roots_table(ACCEPT_MAX_N)
    return table, time.perf_counter() - start
