"""Exhaustive scans of GB_q^n as an independent oracle for the component test."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .spectral import GenFn, is_power_of_two
from .verify import build_family, check, is_gbent_direct

__all__ = ["DEFAULT_BUDGET", "BudgetExceeded", "EnumerationResult", "enumerate_gbent", "function_at"]

DEFAULT_BUDGET = 1 << 24


class BudgetExceeded(ValueError):
    pass


@dataclass
class EnumerationResult:
    n: int
    q: int
    total: int
    gbent_count: int
    tables: list[tuple[int, ...]] | None = None
    # filled when the component predicate was cross-checked
    compared: int = 0
    disagreements: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def agreement_rate(self) -> float | None:
        if not self.compared:
            return None
        return 1.0 - len(self.disagreements) / self.compared

    def merge(self, other: EnumerationResult) -> EnumerationResult:
        tables = None if self.tables is None else self.tables + (other.tables or [])
        return EnumerationResult(
            self.n,
            self.q,
            self.total + other.total,
            self.gbent_count + other.gbent_count,
            tables,
            self.compared + other.compared,
            self.disagreements + other.disagreements,
        )


def function_at(n: int, q: int, index: int) -> GenFn:
    """The ``index``-th function in the scan order (base-q digits, entry 0 least significant)."""
    vals = []
    for _ in range(1 << n):
        index, r = divmod(index, q)
        vals.append(r)
    return GenFn(n, q, vals)


def _values_block(n: int, q: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = []
    for _ in range(1 << n):
        cols.append(idx % q)
        idx = idx // q
    return np.stack(cols, axis=1)


def _scan(n: int, q: int, start: int, stop: int, cross_check: bool, collect: bool) -> EnumerationResult:
    res = EnumerationResult(n, q, 0, 0, [] if collect else None)
    step = 4096
    for lo in range(start, stop, step):
        block = _values_block(n, q, lo, min(stop, lo + step))
        for vals in block:
            g = GenFn(n, q, vals)
            direct = is_gbent_direct(g)
            res.total += 1
            if direct:
                res.gbent_count += 1
                if collect:
                    res.tables.append(tuple(vals.tolist()))
            if cross_check:
                res.compared += 1
                if check(build_family(g)).is_gbent != direct:
                    res.disagreements.append(tuple(vals.tolist()))
    return res


def enumerate_gbent(
    n: int,
    q: int,
    *,
    cross_check: bool = False,
    collect: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> EnumerationResult:
    """Scan every function Z_2^n -> Z_q and count the gbent ones.

    With ``cross_check`` the component predicate (needs ``q = 2^p``, ``p >= 2``)
    is evaluated on every function as well and disagreements are recorded.
    Sharding across ``workers`` does not change the totals.
    """
    total = q ** (1 << n)
    if total > budget:
        raise BudgetExceeded(f"{q}^(2^{n}) = {total} functions exceeds the budget of {budget}")
    if cross_check and not (is_power_of_two(q) and q >= 4):
        raise ValueError("the component cross-check needs q = 2^p with p >= 2")
    if workers <= 1:
        return _scan(n, q, 0, total, cross_check, collect)
    bounds = np.linspace(0, total, workers + 1).astype(np.int64).tolist()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(
            pool.map(
                _scan,
                [n] * workers,
                [q] * workers,
                bounds[:-1],
                bounds[1:],
                [cross_check] * workers,
                [collect] * workers,
            )
        )
    out = parts[0]
    for part in parts[1:]:
        out = out.merge(part)
    return out
