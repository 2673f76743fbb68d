"""gbent verification: the h-family characterization and the direct GWHT test.

For ``f = a_0 + 2 a_1 + ... + 2^(p-1) a_(p-1)`` the family is
``h_i = a_(p-1) + z_i . (a_0, ..., a_(p-2))`` for ``i < 2^(p-1)``, and ``W(u)``
collects ``W_{h_i}(u)`` over ``i``. For even ``n`` every ``W(u)`` must be
``+-2^(n/2)`` times a Hadamard row; for odd ``n`` one half of ``W(u)`` must
vanish and the other be ``+-2^((n+1)/2)`` times a row of half the size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .boolean import BoolFn, DimensionError, dot_combine
from .hadamard import RowMatch, match_row
from .spectral import (
    GenFn,
    butterfly,
    decompose,
    gwht,
    is_gbent_exact,
    is_power_of_two,
    log2_exact,
    spectrum_kind,
)

__all__ = [
    "ComponentFamily",
    "GbentVerdict",
    "SpectralRowReport",
    "build_family",
    "check",
    "check_even",
    "check_odd",
    "disjoint_structure_check",
    "family_from_components",
    "format_report",
    "is_gbent_direct",
    "parse_report",
    "report_table",
]

FLOAT_ATOL = 1e-6


@dataclass(frozen=True, eq=False)
class ComponentFamily:
    p: int
    n: int
    components: tuple[BoolFn, ...]
    h: tuple[BoolFn, ...]

    @property
    def half(self) -> int:
        return 1 << (self.p - 2)

    @cached_property
    def spectra(self) -> np.ndarray:
        """Row ``i`` is the Walsh spectrum of ``h_i``."""
        seqs = np.stack([hi.sequence() for hi in self.h])
        out = butterfly(seqs)
        out.setflags(write=False)
        return out

    def W(self, u: int) -> np.ndarray:
        return self.spectra[:, u]

    def to_genfn(self) -> GenFn:
        vals = np.zeros(1 << self.n, dtype=np.int64)
        for c, a in enumerate(self.components):
            vals += a.table.astype(np.int64) << c
        return GenFn(self.n, 1 << self.p, vals)


def family_from_components(components: Sequence[BoolFn]) -> ComponentFamily:
    p = len(components)
    if p < 2:
        raise ValueError("the h-family needs p >= 2 components")
    n = components[0].n
    if any(a.n != n for a in components):
        raise DimensionError("components must share n")
    # lexicographic order of z_i: h_{i + 2^m} = h_i + a_m
    h = [components[-1]]
    for a in components[:-1]:
        h += [hi ^ a for hi in h]
    return ComponentFamily(p, n, tuple(components), tuple(h))


def build_family(g: GenFn) -> ComponentFamily:
    if not is_power_of_two(g.q):
        raise ValueError(f"q={g.q} is not a power of two")
    if log2_exact(g.q) < 2:
        raise ValueError("the h-family needs q = 2^p with p >= 2")
    return family_from_components(decompose(g))


def h_by_dot_combine(fam: ComponentFamily, i: int) -> BoolFn:
    """Reference construction of ``h_i`` straight from the definition."""
    lower = list(fam.components[:-1])
    return fam.components[-1] ^ dot_combine(i, lower)


@dataclass(frozen=True)
class SpectralRowReport:
    u: int
    W: tuple[int, ...]
    verdict: str  # "even-row" | "odd-first-half" | "odd-second-half" | "violation"
    match: RowMatch | None = None
    reason: str = ""

    def tag(self) -> str:
        if self.verdict == "violation":
            return f"violation: {self.reason}"
        assert self.match is not None
        if self.verdict == "even-row":
            return "{" + self.match.tag() + "}"
        zero = f"0_{len(self.W) // 2}"
        if self.verdict == "odd-first-half":
            return "{" + f"{self.match.tag()}, {zero}" + "}"
        return "{" + f"{zero}, {self.match.tag()}" + "}"


@dataclass
class GbentVerdict:
    is_gbent: bool
    failures: list[tuple[int | None, str]] = field(default_factory=list)
    per_u: list[SpectralRowReport] = field(default_factory=list)

    def summary(self) -> str:
        head = "gbent" if self.is_gbent else "not gbent"
        if not self.failures:
            return head
        shown = "; ".join(f"{'u=' + str(u) if u is not None else 'family'}: {r}" for u, r in self.failures[:5])
        more = f" (+{len(self.failures) - 5} more)" if len(self.failures) > 5 else ""
        return f"{head}: {shown}{more}"


def _row_report_even(fam: ComponentFamily, u: int) -> SpectralRowReport:
    w = fam.W(u)
    amp = 1 << (fam.n // 2)
    m = match_row(w)
    if not m:
        return SpectralRowReport(u, tuple(w.tolist()), "violation", reason=f"W(u) is not +-c H^(r) ({m.reason})")
    if m.scale != amp:
        return SpectralRowReport(u, tuple(w.tolist()), "violation", m, f"scale {m.scale} != {amp}")
    return SpectralRowReport(u, tuple(w.tolist()), "even-row", m)


def _row_report_odd(fam: ComponentFamily, u: int) -> SpectralRowReport:
    w = fam.W(u)
    wt = tuple(w.tolist())
    amp = 1 << ((fam.n + 1) // 2)
    half = fam.half
    first, second = w[:half], w[half:]
    zf, zs = not first.any(), not second.any()
    if zf and zs:
        return SpectralRowReport(u, wt, "violation", reason="both halves of W(u) vanish")
    if not zf and not zs:
        return SpectralRowReport(u, wt, "violation", reason="neither half of W(u) vanishes")
    live, verdict = (second, "odd-second-half") if zf else (first, "odd-first-half")
    m = match_row(live)
    if not m:
        return SpectralRowReport(u, wt, "violation", reason=f"non-zero half is not +-c H^(r) ({m.reason})")
    if m.scale != amp:
        return SpectralRowReport(u, wt, "violation", m, f"scale {m.scale} != {amp}")
    return SpectralRowReport(u, wt, verdict, m)


def _check(fam: ComponentFamily, want: str, row_report) -> GbentVerdict:
    failures: list[tuple[int | None, str]] = []
    for i in range(len(fam.h)):
        kind = spectrum_kind(fam.spectra[i], fam.n)
        if kind != want:
            failures.append((None, f"h_{i} is {kind}, not {want}"))
    per_u = [row_report(fam, u) for u in range(1 << fam.n)]
    failures.extend((r.u, r.reason) for r in per_u if r.verdict == "violation")
    return GbentVerdict(not failures, failures, per_u)


def check_even(fam: ComponentFamily) -> GbentVerdict:
    if fam.n % 2:
        raise ValueError("check_even needs an even number of variables")
    return _check(fam, "bent", _row_report_even)


def check_odd(fam: ComponentFamily) -> GbentVerdict:
    if fam.n % 2 == 0:
        raise ValueError("check_odd needs an odd number of variables")
    return _check(fam, "semibent", _row_report_odd)


def check(fam: ComponentFamily) -> GbentVerdict:
    return check_odd(fam) if fam.n % 2 else check_even(fam)


def is_gbent_direct(g: GenFn) -> bool:
    """``|H_g(w)|^2 = 2^n`` for all ``w``; exact in Z[zeta] when ``q = 2^p``."""
    spec = gwht(g)
    if spec.exact_coeffs is not None:
        return is_gbent_exact(spec)
    return bool(np.all(np.abs(np.abs(spec.approx) ** 2 - (1 << g.n)) <= FLOAT_ATOL))


def disjoint_structure_check(fam: ComponentFamily) -> bool:
    """Every ``h_i`` of the first half has disjoint spectrum with every ``h_j`` of the second."""
    if fam.n % 2 == 0:
        raise ValueError("disjoint structure only applies to odd n")
    S = fam.spectra
    half = fam.half
    for i in range(half):
        for j in range(half, 2 * half):
            if np.any(S[i] * S[j]):
                return False
    return True


def report_table(fam: ComponentFamily) -> list[SpectralRowReport]:
    row_report = _row_report_odd if fam.n % 2 else _row_report_even
    return [row_report(fam, u) for u in range(1 << fam.n)]


# Report text format: one line per u,
#     u_<index> | {<W values, comma separated>} | <decomposition tag>


def format_report(reports: Sequence[SpectralRowReport]) -> str:
    return "".join(f"u_{r.u} | {{{', '.join(map(str, r.W))}}} | {r.tag()}\n" for r in reports)


def parse_report(text: str) -> list[tuple[int, tuple[int, ...], str]]:
    rows = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        u_col, w_col, tag = (c.strip() for c in ln.split("|", 2))
        if not u_col.startswith("u_"):
            raise ValueError(f"bad row label {u_col!r}")
        w = tuple(int(t) for t in w_col.strip("{}").split(","))
        rows.append((int(u_col[2:]), w, tag))
    return rows
