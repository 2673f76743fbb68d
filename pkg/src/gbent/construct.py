"""Maiorana-McFarland based constructions of gbent functions.

MM functions on ``n = 2k+1`` variables take ``x`` in Z_2^k and ``y`` in
Z_2^(k+1); a truth-table index packs ``x`` into the low ``k`` bits and ``y``
into the high ``k+1`` bits. The fixed coordinate of ``phi_j(x) = (j, pi(x))``
pairs with ``y_0``, the lowest ``y`` bit. Spectrum indices ``u = (w1, w2)`` use
the same packing, with ``w2 = (t, w2')`` and ``t`` the lowest bit of ``w2``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolean import BoolFn, DimensionError, Gf2Matrix, SingularMatrixError, dot, gf2_invert, random_invertible
from .hadamard import NoMatch, RowMatch, match_row
from .spectral import GenFn
from .verify import ComponentFamily, family_from_components

__all__ = [
    "ConstructionSpec",
    "MmMap",
    "PRESETS",
    "build_components",
    "component_maps",
    "compose_mm",
    "construct_gbent_even",
    "construct_gbent_odd",
    "disjoint_pair",
    "format_spec",
    "gmmf_from_vectors",
    "h_maps",
    "hc_check",
    "hc_predicted",
    "parse_spec",
    "pp0_spectrum",
    "random_spec",
    "semibent_from_map",
]


def _parity(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.int64)
    out = np.zeros_like(a)
    while np.any(a):
        out ^= a & 1
        a >>= 1
    return out


@dataclass(frozen=True)
class MmMap:
    """``phi_j(x) = (j, pi(x))`` with ``pi`` given as a table of bitmasks."""

    k: int
    j: int
    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.j not in (0, 1):
            raise ValueError("j must be a bit")
        if len(self.pi) != 1 << self.k:
            raise DimensionError(f"pi needs 2^{self.k} entries, got {len(self.pi)}")
        if any(not 0 <= v < (1 << self.k) for v in self.pi):
            raise DimensionError("pi values must lie in Z_2^k")

    @classmethod
    def affine(cls, S: Gf2Matrix, d: int, j: int) -> MmMap:
        return cls(S.k, j, tuple(S.row_mul(x) ^ d for x in range(1 << S.k)))

    @classmethod
    def constant(cls, k: int, v: int, j: int) -> MmMap:
        return cls(k, j, (v,) * (1 << k))

    @property
    def is_perm(self) -> bool:
        return len(set(self.pi)) == len(self.pi)

    def inverse(self) -> tuple[int, ...]:
        if not self.is_perm:
            raise ValueError("pi is not a permutation")
        inv = [0] * len(self.pi)
        for x, y in enumerate(self.pi):
            inv[y] = x
        return tuple(inv)

    def __xor__(self, other: MmMap) -> MmMap:
        if self.k != other.k:
            raise DimensionError("maps act on different spaces")
        return MmMap(self.k, self.j ^ other.j, tuple(a ^ b for a, b in zip(self.pi, other.pi)))


def semibent_from_map(m: MmMap, d_fn: BoolFn | None = None) -> BoolFn:
    """Truth table of ``g(x, y) = phi_j(x) . y + d(x)`` on ``2k+1`` variables."""
    k = m.k
    if d_fn is not None and d_fn.n != k:
        raise DimensionError(f"d must have {k} variables, got {d_fn.n}")
    idx = np.arange(1 << (2 * k + 1), dtype=np.int64)
    x = idx & ((1 << k) - 1)
    y = idx >> k
    phi = m.j | (np.asarray(m.pi, dtype=np.int64)[x] << 1)
    table = _parity(phi & y)
    if d_fn is not None:
        table ^= d_fn.table[x]
    return BoolFn(2 * k + 1, table)


def pp0_spectrum(m: MmMap, w1: int, w2: int, _inv: Sequence[int] | None = None) -> int:
    """Closed-form Walsh coefficient of ``phi_j(x) . y`` for a permutation ``pi``."""
    if not m.is_perm:
        raise ValueError("pi is not a permutation")
    if not 0 <= w1 < (1 << m.k) or not 0 <= w2 < (1 << (m.k + 1)):
        raise DimensionError("spectral point out of range")
    t, w2p = w2 & 1, w2 >> 1
    if t != m.j:
        return 0
    inv = _inv if _inv is not None else m.inverse()
    return (-1) ** dot(w1, inv[w2p]) * (1 << (m.k + 1))


def disjoint_pair(mP: MmMap, mS: MmMap) -> tuple[BoolFn, BoolFn]:
    """``(f_pi, f_pi + g_sigma)`` for ``f_pi`` in P^(j) and ``g_sigma`` of class 1.

    The second function is ``phi`` with first coordinate ``j + 1`` and map
    ``pi + sigma``, so the two have disjoint spectra once ``pi + sigma`` is a
    permutation.
    """
    if not mP.is_perm:
        raise ValueError("f_pi must come from a permutation")
    if mS.j != 1:
        raise ValueError("g_sigma must have fixed coordinate 1")
    combo = mP ^ mS
    if not combo.is_perm:
        raise ValueError("pi xor sigma is not a permutation")
    return semibent_from_map(mP), semibent_from_map(combo)


# --- odd-n construction ---------------------------------------------------------


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of the odd-n construction.

    ``sigma(x) = xS + d`` drives ``a_(p-1)``, with fixed coordinate ``j_sigma``;
    ``a_c`` uses the constant map ``v[c]``, fixed coordinate 0 for ``c <= p-3``
    and 1 for ``c = p-2``.
    """

    k: int
    p: int
    S: Gf2Matrix
    d: int
    v: tuple[int, ...]
    j_sigma: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if self.S.k != self.k:
            raise DimensionError(f"S is {self.S.k}x{self.S.k}, expected {self.k}x{self.k}")
        if not 0 <= self.d < (1 << self.k):
            raise DimensionError("d must lie in Z_2^k")
        if len(self.v) != self.p - 1:
            raise DimensionError(f"need {self.p - 1} vectors v, got {len(self.v)}")
        if any(not 0 <= vc < (1 << self.k) for vc in self.v):
            raise DimensionError("v vectors must lie in Z_2^k")
        if self.j_sigma not in (0, 1):
            raise ValueError("j_sigma must be a bit")
        if not self.S.is_invertible():
            raise SingularMatrixError()

    @property
    def n(self) -> int:
        return 2 * self.k + 1

    @property
    def q(self) -> int:
        return 1 << self.p

    def j_bits(self) -> tuple[int, ...]:
        """Fixed coordinates ``j_0, ..., j_(p-1)`` of the component maps."""
        return (0,) * (self.p - 2) + (1, self.j_sigma)


def component_maps(spec: ConstructionSpec) -> list[MmMap]:
    """MM maps of ``a_0, ..., a_(p-1)``."""
    js = spec.j_bits()
    maps = [MmMap.constant(spec.k, vc, js[c]) for c, vc in enumerate(spec.v)]
    maps.append(MmMap.affine(spec.S, spec.d, spec.j_sigma))
    return maps


def h_maps(spec: ConstructionSpec) -> list[MmMap]:
    """MM maps ``(j, pi_i)`` of ``h_i``, with ``pi_i = sigma + z_i . (tau_0, ...)``."""
    maps = component_maps(spec)
    out = [maps[-1]]
    for m in maps[:-1]:
        out += [h ^ m for h in out]
    return out


def compose_mm(maps: Sequence[MmMap]) -> ComponentFamily:
    """Family of ``a_c = phi(maps[c]) . y``; no gbent guarantee for arbitrary maps."""
    return family_from_components([semibent_from_map(m) for m in maps])


def build_components(spec: ConstructionSpec) -> ComponentFamily:
    return compose_mm(component_maps(spec))


def construct_gbent_odd(spec: ConstructionSpec) -> GenFn:
    return build_components(spec).to_genfn()


def hc_predicted(spec: ConstructionSpec, u: int) -> tuple[RowMatch | NoMatch, RowMatch | NoMatch]:
    """Sign vectors ``(-1)^(w1 . pi_i^-1(w2'))`` of both halves, matched to Hadamard rows.

    Uses ``pi_i^-1(x) = (x + d + z_i . v) S^-1`` rather than any transform.
    """
    if not 0 <= u < (1 << spec.n):
        raise DimensionError("u out of range")
    k = spec.k
    w1 = u & ((1 << k) - 1)
    w2p = u >> (k + 1)
    S_inv = gf2_invert(spec.S)
    shifts = [0]
    for vc in spec.v:
        shifts += [s ^ vc for s in shifts]
    half = 1 << (spec.p - 2)
    delta = [dot(w1, S_inv.row_mul(w2p ^ spec.d ^ s)) for s in shifts]
    signs = 1 - 2 * np.array(delta, dtype=np.int64)
    return match_row(signs[:half]), match_row(signs[half:])


def hc_check(spec: ConstructionSpec, u: int) -> bool:
    first, second = hc_predicted(spec, u)
    return bool(first) and bool(second) and first.scale == 1 and second.scale == 1


# --- even n ---------------------------------------------------------------------


def construct_gbent_even(k: int, q: int, g_y: GenFn, S: Gf2Matrix, d: int) -> GenFn:
    """``f(x, y) = g(y) + (q/2) (xS + d) . y`` on ``2k`` variables (x low, y high)."""
    if q < 2 or q % 2:
        raise ValueError(f"q must be even, got {q}")
    if g_y.n != k or g_y.q != q:
        raise DimensionError(f"g must map Z_2^{k} to Z_{q}")
    if S.k != k:
        raise DimensionError("S has the wrong size")
    if not S.is_invertible():
        raise SingularMatrixError()
    if not 0 <= d < (1 << k):
        raise DimensionError("d must lie in Z_2^k")
    sigma = np.array([S.row_mul(x) ^ d for x in range(1 << k)], dtype=np.int64)
    idx = np.arange(1 << (2 * k), dtype=np.int64)
    x = idx & ((1 << k) - 1)
    y = idx >> k
    vals = (g_y.values[y] + (q // 2) * _parity(sigma[x] & y)) % q
    return GenFn(2 * k, q, vals)


def gmmf_from_vectors(k: int, p: int, S: Gf2Matrix, d: int, v: Sequence[int]) -> GenFn:
    """Even-n form with ``g(y) = sum_c 2^c v[c] . y`` over ``q = 2^p``."""
    if len(v) != p - 1:
        raise DimensionError(f"need {p - 1} vectors v")
    ys = np.arange(1 << k, dtype=np.int64)
    g = np.zeros(1 << k, dtype=np.int64)
    for c, vc in enumerate(v):
        g += _parity(ys & vc) << c
    return construct_gbent_even(k, 1 << p, GenFn(k, 1 << p, g), S, d)


# --- sampling, presets, spec files -------------------------------------------


def random_spec(k: int, p: int, seed: int | np.random.Generator | None = None) -> ConstructionSpec:
    rng = np.random.default_rng(seed)
    S = random_invertible(k, rng)
    d = int(rng.integers(0, 1 << k))
    v = tuple(int(x) for x in rng.integers(0, 1 << k, size=p - 1))
    return ConstructionSpec(k, p, S, d, v, int(rng.integers(0, 2)))


PRESETS: dict[str, ConstructionSpec] = {
    "paper-example-n5-q32": ConstructionSpec(
        k=2,
        p=5,
        S=Gf2Matrix.identity(2),
        d=0b10,  # (0, 1)
        v=(0b01, 0b10, 0b00, 0b11),  # (1,0), (0,1), (0,0), (1,1)
        j_sigma=1,
    ),
}

# Spec file: key=value lines (or a JSON object with the same keys)
#   k=2
#   p=5
#   S=1001          row-major bit string, k*k characters
#   d=01            bit string, character j = coordinate j
#   v0=10 ... v{p-2}=...
#   j_sigma=1


def _bits(s: str, k: int, name: str) -> int:
    s = str(s).strip()
    if len(s) != k or not re.fullmatch(r"[01]+", s):
        raise ValueError(f"{name} must be a {k}-character bit string, got {s!r}")
    return sum(int(c) << j for j, c in enumerate(s))


def _bitstr(v: int, k: int) -> str:
    return "".join(str((v >> j) & 1) for j in range(k))


def parse_spec(text: str) -> ConstructionSpec:
    text = text.strip()
    if text.startswith("{"):
        fields = {key: str(val) for key, val in json.loads(text).items()}
    else:
        fields = {}
        for ln in text.splitlines():
            ln = ln.split("#", 1)[0].strip()
            if not ln:
                continue
            if "=" not in ln:
                raise ValueError(f"expected key=value, got {ln!r}")
            key, val = (s.strip() for s in ln.split("=", 1))
            fields[key] = val
    try:
        k, p = int(fields["k"]), int(fields["p"])
        s_bits = str(fields["S"]).strip()
        if len(s_bits) != k * k or not re.fullmatch(r"[01]+", s_bits):
            raise ValueError(f"S must be a {k * k}-character bit string")
        S = Gf2Matrix(k, tuple(_bits(s_bits[i * k : (i + 1) * k], k, "S row") for i in range(k)))
        d = _bits(fields["d"], k, "d")
        v = tuple(_bits(fields[f"v{c}"], k, f"v{c}") for c in range(p - 1))
        j_sigma = int(fields["j_sigma"])
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r}") from None
    return ConstructionSpec(k, p, S, d, v, j_sigma)


def format_spec(spec: ConstructionSpec) -> str:
    k = spec.k
    lines = [f"k={k}", f"p={spec.p}", "S=" + "".join(_bitstr(r, k) for r in spec.S.rows), f"d={_bitstr(spec.d, k)}"]
    lines += [f"v{c}={_bitstr(vc, k)}" for c, vc in enumerate(spec.v)]
    lines.append(f"j_sigma={spec.j_sigma}")
    return "\n".join(lines) + "\n"
