"""Sylvester-Hadamard rows and recognition of vectors of the form +-c H^(r)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .boolean import DimensionError, int_to_bits
from .spectral import is_power_of_two

__all__ = ["NoMatch", "RowMatch", "hadamard_matrix", "hadamard_row", "match_row"]


def hadamard_row(m: int, r: int) -> np.ndarray:
    """Row ``r`` of H_{2^m}: entry ``i`` is ``(-1)^(z_r . z_i)``.

    The returned array is shared and read-only.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if not 0 <= r < (1 << m):
        raise ValueError(f"row index {r} out of range for H_{1 << m}")
    return _row(m, r)


@lru_cache(maxsize=4096)
def _row(m: int, r: int) -> np.ndarray:
    i = np.arange(1 << m, dtype=np.int64) & r
    par = np.zeros(1 << m, dtype=np.int64)
    for j in range(m):
        par ^= (i >> j) & 1
    out = 1 - 2 * par
    out.setflags(write=False)
    return out


def hadamard_matrix(m: int) -> np.ndarray:
    """H_{2^m} by the Kronecker recursion ``H_{2^k} = H_2 (x) H_{2^(k-1)}``."""
    H = np.ones((1, 1), dtype=np.int64)
    H2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    for _ in range(m):
        H = np.kron(H2, H)
    return H


@dataclass(frozen=True)
class RowMatch:
    sign: int
    scale: int
    row: int
    m: int

    @property
    def a(self) -> tuple[int, ...]:
        """The linear functional whose sequence is row ``row``."""
        return int_to_bits(self.row, self.m)

    @property
    def b(self) -> int:
        return 0 if self.sign > 0 else 1

    def vector(self) -> np.ndarray:
        return self.sign * self.scale * hadamard_row(self.m, self.row)

    def tag(self) -> str:
        """E.g. ``-8H^(1)_8``."""
        coef = self.sign * self.scale
        return f"{coef}H^({self.row})_{1 << self.m}"

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NoMatch:
    reason: str  # "zero-vector" | "not-a-row"

    def __bool__(self) -> bool:
        return False


def match_row(v: Sequence[int] | np.ndarray) -> RowMatch | NoMatch:
    """Decompose ``v`` as ``sign * scale * H^(r)`` if possible.

    Rows of H start with +1, so the sign is that of ``v[0]``. The row index is
    read off the entries at the unit-vector positions ``2^j`` and the whole
    vector is then verified, O(len(v)).
    """
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if not is_power_of_two(v.size):
        raise DimensionError(f"length {v.size} is not a power of two")
    m = v.size.bit_length() - 1
    if not np.any(v):
        return NoMatch("zero-vector")
    c = int(abs(v[0]))
    if c == 0:
        return NoMatch("not-a-row")
    sign = 1 if v[0] > 0 else -1
    normalized = v * sign
    r = 0
    for j in range(m):
        e = int(normalized[1 << j])
        if e == -c:
            r |= 1 << j
        elif e != c:
            return NoMatch("not-a-row")
    if not np.array_equal(normalized, c * hadamard_row(m, r)):
        return NoMatch("not-a-row")
    return RowMatch(sign, c, r, m)
