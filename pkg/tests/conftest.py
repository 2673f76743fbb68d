import cmath
from pathlib import Path

import numpy as np
import pytest

from gbent import BoolFn, GenFn

DATA = Path(__file__).parent / "data"

EXAMPLE_VALUES = (
    0, 0, 0, 0, 24, 24, 24, 24, 9, 25, 9, 25, 17, 1, 17, 1,
    26, 26, 10, 10, 2, 2, 18, 18, 19, 3, 3, 19, 11, 27, 27, 11,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def naive_wht(f: BoolFn) -> list[int]:
    """O(4^n) reference transform, straight from the definition."""
    N = 1 << f.n
    t = f.table.tolist()
    return [sum(1 if (t[x] + (w & x).bit_count()) % 2 == 0 else -1 for x in range(N)) for w in range(N)]


def naive_wht_matrix(n: int) -> np.ndarray:
    """Matrix of (-1)^(w.x) built from popcounts; multiply by the +-1 sequence."""
    idx = np.arange(1 << n, dtype=np.uint64)
    par = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
    return 1 - 2 * par.astype(np.int64)


def naive_gwht_complex(g: GenFn) -> list[complex]:
    N = 1 << g.n
    zeta = cmath.exp(2j * cmath.pi / g.q)
    vals = g.values.tolist()
    return [sum(zeta ** vals[x] * (-1) ** (w & x).bit_count() for x in range(N)) for w in range(N)]


def random_bool(rng, n: int) -> BoolFn:
    return BoolFn(n, rng.integers(0, 2, size=1 << n))


def random_genfn(rng, n: int, q: int) -> GenFn:
    return GenFn(n, q, rng.integers(0, q, size=1 << n))


# --- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
