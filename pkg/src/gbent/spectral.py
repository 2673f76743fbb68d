"""Walsh-Hadamard and generalized Walsh-Hadamard transforms."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .boolean import BoolFn, DimensionError
from .cyclotomic import CycInt, negacyclic_norm_sq

__all__ = [
    "GenFn",
    "GwhtSpectrum",
    "Classification",
    "WalshSpectrum",
    "butterfly",
    "classify",
    "spectrum_kind",
    "compose",
    "decompose",
    "disjoint_spectra",
    "format_genfn",
    "format_gwht",
    "format_wht",
    "fwht",
    "gwht",
    "gwht_direct",
    "is_power_of_two",
    "log2_exact",
    "parse_genfn",
]


def is_power_of_two(q: int) -> bool:
    return q >= 1 and q & (q - 1) == 0


def log2_exact(q: int) -> int:
    if not is_power_of_two(q):
        raise ValueError(f"q={q} is not a power of two")
    return q.bit_length() - 1


def butterfly(values: np.ndarray) -> np.ndarray:
    """Unnormalised Walsh-Hadamard butterfly along the last axis.

    Works on a copy; the last axis must have power-of-two length. Integer input
    stays integer (int64), complex input stays complex.
    """
    a = np.array(values, dtype=np.complex128 if np.iscomplexobj(values) else np.int64)
    size = a.shape[-1]
    if not is_power_of_two(size):
        raise DimensionError(f"length {size} is not a power of two")
    lead = a.shape[:-1]
    h = 1
    while h < size:
        v = a.reshape(*lead, -1, 2, h)
        lo = v[..., 0, :].copy()
        v[..., 0, :] += v[..., 1, :]
        v[..., 1, :] = lo - v[..., 1, :]
        h <<= 1
    return a


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    n: int
    values: np.ndarray

    def __getitem__(self, w: int) -> int:
        return int(self.values[w])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def parseval_ok(self) -> bool:
        # squares are non-negative and sum to 2^(2n): int64 is exact for n <= 31
        v = self.values.astype(np.int64)
        return int(np.dot(v, v)) == 1 << (2 * self.n)


def fwht(f: BoolFn) -> WalshSpectrum:
    """``W_f(w) = sum_x (-1)^(f(x) + w.x)`` for every ``w``, in O(n 2^n)."""
    vals = butterfly(f.sequence())
    vals.setflags(write=False)
    return WalshSpectrum(f.n, vals)


# --- generalized functions ---------------------------------------------------


class GenFn:
    """Generalized Boolean function Z_2^n -> Z_q as a vector of residues."""

    __slots__ = ("n", "q", "values")

    def __init__(self, n: int, q: int, values: Iterable[int] | np.ndarray) -> None:
        if q < 2:
            raise ValueError("q must be >= 2")
        arr = np.array(values, dtype=np.int64).reshape(-1)
        if arr.size != 1 << n:
            raise DimensionError(f"{arr.size} values given, expected 2^{n}")
        if arr.size and (arr.min() < 0 or arr.max() >= q):
            raise ValueError(f"values must lie in [0, {q - 1}]")
        arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("GenFn is immutable")

    @classmethod
    def from_bool(cls, f: BoolFn) -> GenFn:
        return cls(f.n, 2, f.table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenFn):
            return NotImplemented
        return self.n == other.n and self.q == other.q and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.n, self.q, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"GenFn(n={self.n}, q={self.q}, values={self.values.tolist()})"


def decompose(g: GenFn) -> list[BoolFn]:
    """Binary digits ``a_0, ..., a_{p-1}`` with ``g = sum 2^i a_i``."""
    p = log2_exact(g.q)
    if p < 1:
        raise ValueError("q must be at least 2")
    return [BoolFn(g.n, (g.values >> i) & 1) for i in range(p)]


def compose(parts: Sequence[BoolFn]) -> GenFn:
    if not parts:
        raise ValueError("need at least one component")
    n = parts[0].n
    vals = np.zeros(1 << n, dtype=np.int64)
    for i, a in enumerate(parts):
        if a.n != n:
            raise DimensionError("components must share n")
        vals += a.table.astype(np.int64) << i
    return GenFn(n, 1 << len(parts), vals)


@dataclass(frozen=True, eq=False)
class GwhtSpectrum:
    n: int
    q: int
    approx: np.ndarray
    exact_coeffs: np.ndarray | None = field(default=None)

    @property
    def exact(self) -> list[CycInt] | None:
        if self.exact_coeffs is None:
            return None
        p = log2_exact(self.q)
        return [CycInt(p, row) for row in self.exact_coeffs.tolist()]

    def norms_sq_exact(self) -> np.ndarray:
        """Rows of ``H(w) conj(H(w))`` in coefficient form."""
        if self.exact_coeffs is None:
            raise ValueError("exact spectrum only available for q = 2^p")
        return negacyclic_norm_sq(self.exact_coeffs)

    def consistent(self, rtol: float = 1e-9) -> bool:
        """Exact values evaluated at zeta agree with the floating ones."""
        if self.exact_coeffs is None:
            return True
        h = self.exact_coeffs.shape[1]
        zeta = np.exp(2j * np.pi / self.q) ** np.arange(h)
        ev = self.exact_coeffs @ zeta
        return bool(np.allclose(ev, self.approx, rtol=rtol, atol=rtol * (1 << self.n)))


def _exact_coeffs(g: GenFn) -> np.ndarray:
    # zeta^v = e_v for v < h and -e_{v-h} otherwise, so coefficient m of H(w)
    # is the WHT of the signed indicator [g = m] - [g = m + h]
    p = log2_exact(g.q)
    h = 1 << (p - 1)
    vals = g.values
    ind = np.zeros((h, vals.size), dtype=np.int64)
    low = vals < h
    ind[vals[low], np.nonzero(low)[0]] = 1
    ind[vals[~low] - h, np.nonzero(~low)[0]] = -1
    return butterfly(ind).T.copy()


def gwht(g: GenFn) -> GwhtSpectrum:
    """``H_g(w) = sum_x zeta^g(x) (-1)^(w.x)``.

    The floating values come from a complex butterfly; when ``q`` is a power
    of two the exact values in Z[zeta] are computed as well.
    """
    zeta_pow = np.exp(2j * np.pi * g.values / g.q)
    approx = butterfly(zeta_pow)
    exact = _exact_coeffs(g) if is_power_of_two(g.q) else None
    for arr in (approx, exact):
        if arr is not None:
            arr.setflags(write=False)
    return GwhtSpectrum(g.n, g.q, approx, exact)


def gwht_direct(g: GenFn) -> list[CycInt]:
    """Exact GWHT by direct O(4^n) summation in the cyclotomic ring."""
    p = log2_exact(g.q)
    N = 1 << g.n
    powers = [CycInt.zeta_power(p, int(v)) for v in g.values]
    out = []
    for w in range(N):
        acc = CycInt.zero(p)
        for x in range(N):
            if (w & x).bit_count() & 1:
                acc = acc - powers[x]
            else:
                acc = acc + powers[x]
        out.append(acc)
    return out


def is_gbent_exact(spec: GwhtSpectrum) -> bool:
    norms = spec.norms_sq_exact()
    return bool(np.all(norms[:, 0] == 1 << spec.n) and not np.any(norms[:, 1:]))


# --- classification ------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    kind: str  # "bent" | "semibent" | "other"
    value_counts: dict[int, int]

    def __str__(self) -> str:
        counts = ", ".join(f"{v}: {c}" for v, c in sorted(self.value_counts.items()))
        return f"{self.kind} ({{{counts}}})"


def spectrum_kind(W: np.ndarray, n: int) -> str:
    absw = np.abs(W)
    if n % 2 == 0:
        return "bent" if np.all(absw == 1 << (n // 2)) else "other"
    amp = 1 << ((n + 1) // 2)
    if np.all((absw == 0) | (absw == amp)) and np.any(absw):
        return "semibent"
    return "other"


def classify(f: BoolFn, spectrum: WalshSpectrum | None = None) -> Classification:
    W = (spectrum or fwht(f)).values
    vals, counts = np.unique(W, return_counts=True)
    summary = {int(v): int(c) for v, c in zip(vals, counts)}
    return Classification(spectrum_kind(W, f.n), summary)


def disjoint_spectra(f: BoolFn, g: BoolFn) -> bool:
    if f.n != g.n:
        raise DimensionError("functions must share n")
    return not np.any(fwht(f).values * fwht(g).values)


# --- text formats ----------------------------------------------------------------
#
# GenFn file: header "n=<int> q=<int>", then 2^n lines with one value each.
# WHT dump:   one line per w: "<index> <W(w)>".
# GWHT dump:  one line per w: "<index> <c_0,c_1,...> | <re> <im>"; the
#             coefficient list is "-" when q is not a power of two.


def format_genfn(g: GenFn) -> str:
    return f"n={g.n} q={g.q}\n" + "".join(f"{v}\n" for v in g.values.tolist())


def parse_genfn(text: str) -> GenFn:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty function file")
    m = re.fullmatch(r"n\s*=\s*(\d+)[\s,]+q\s*=\s*(\d+)", lines[0])
    if not m:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, q = int(m.group(1)), int(m.group(2))
    try:
        vals = [int(tok) for ln in lines[1:] for tok in ln.split()]
    except ValueError as exc:
        raise ValueError(f"non-integer value in function file: {exc}") from None
    return GenFn(n, q, vals)


def format_wht(spec: WalshSpectrum) -> str:
    return "".join(f"{w} {v}\n" for w, v in enumerate(spec.values.tolist()))


def _fmt_float(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def format_gwht(spec: GwhtSpectrum) -> str:
    lines = []
    coeffs = spec.exact_coeffs.tolist() if spec.exact_coeffs is not None else None
    for w, z in enumerate(spec.approx.tolist()):
        c = ",".join(map(str, coeffs[w])) if coeffs is not None else "-"
        lines.append(f"{w} {c} | {_fmt_float(z.real)} {_fmt_float(z.imag)}\n")
    return "".join(lines)
