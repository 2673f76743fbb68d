"""Boolean functions as truth tables, ANF conversion and GF(2) linear algebra.

Vectors of Z_2^k are plain ``int`` bitmasks throughout the package: coordinate
``j`` of a vector is bit ``j`` (LSB first), so the vector ``z_i`` is the integer
``i``. Truth tables are indexed the same way, i.e. ``table[i] = f(z_i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AnfPoly",
    "BoolFn",
    "DimensionError",
    "Gf2Matrix",
    "SingularMatrixError",
    "anf_to_table",
    "bits_to_int",
    "dot",
    "dot_combine",
    "format_anf",
    "format_table",
    "gf2_invert",
    "int_to_bits",
    "linear_perm_apply",
    "linear_perm_inverse_apply",
    "parse_anf",
    "parse_table",
    "random_invertible",
    "table_to_anf",
    "xor",
]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    def __init__(self, msg: str = "singular matrix") -> None:
        super().__init__(msg)


def bits_to_int(bits: Iterable[int]) -> int:
    """``(b_0, b_1, ...)`` -> ``sum b_j 2^j``."""
    out = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        out |= b << j
    return out


def int_to_bits(v: int, k: int) -> tuple[int, ...]:
    return tuple((v >> j) & 1 for j in range(k))


def dot(a: int, b: int) -> int:
    """Inner product over GF(2) of two bitmask vectors."""
    return (a & b).bit_count() & 1


def _as_vec(x: int | Sequence[int], k: int) -> int:
    if isinstance(x, (int, np.integer)):
        x = int(x)
        if not 0 <= x < (1 << k):
            raise DimensionError(f"vector {x} does not fit in {k} bits")
        return x
    if len(x) != k:
        raise DimensionError(f"expected a vector of length {k}, got {len(x)}")
    return bits_to_int(x)


def _parity_table(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    par = np.zeros(1 << n, dtype=np.uint8)
    for j in range(n):
        par ^= ((idx >> j) & 1).astype(np.uint8)
    return par


class BoolFn:
    """Boolean function of ``n`` variables given by its truth table."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: Iterable[int] | np.ndarray) -> None:
        if n < 0:
            raise ValueError("n must be non-negative")
        arr = np.array(table, dtype=np.uint8).reshape(-1)
        if arr.size != 1 << n:
            raise DimensionError(f"table length {arr.size} != 2^{n}")
        if arr.size and arr.max() > 1:
            raise ValueError("truth table entries must be 0 or 1")
        arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", arr)

    def __setattr__(self, name, value):
        raise AttributeError("BoolFn is immutable")

    @classmethod
    def zero(cls, n: int) -> BoolFn:
        return cls(n, np.zeros(1 << n, dtype=np.uint8))

    @classmethod
    def linear(cls, n: int, a: int) -> BoolFn:
        """The linear function ``x -> a.x``."""
        idx = np.arange(1 << n, dtype=np.int64) & a
        return cls(n, _parity_table(n)[idx])

    @classmethod
    def from_callable(cls, n: int, fn) -> BoolFn:
        return cls(n, [fn(int_to_bits(i, n)) & 1 for i in range(1 << n)])

    def __call__(self, x: int | Sequence[int]) -> int:
        return int(self.table[_as_vec(x, self.n)])

    def __xor__(self, other: BoolFn) -> BoolFn:
        return xor(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolFn):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        bits = "".join(map(str, self.table[:64].tolist()))
        more = "..." if self.table.size > 64 else ""
        return f"BoolFn(n={self.n}, table={bits}{more})"

    def weight(self) -> int:
        return int(self.table.sum(dtype=np.int64))

    def sequence(self) -> np.ndarray:
        """The (1, -1) sequence ``(-1)^f(z_i)``."""
        return 1 - 2 * self.table.astype(np.int64)


@dataclass(frozen=True)
class AnfPoly:
    """ANF coefficients: ``coeffs[u]`` is the coefficient of ``prod_{j in u} x_j``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 1 << self.n:
            raise DimensionError(f"coefficient vector length {len(self.coeffs)} != 2^{self.n}")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("ANF coefficients must be bits")

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[int]) -> AnfPoly:
        c = [0] * (1 << n)
        for u in monomials:
            c[u] ^= 1
        return cls(n, tuple(c))

    def monomials(self) -> list[int]:
        return [u for u, c in enumerate(self.coeffs) if c]

    def degree(self) -> int:
        return max((u.bit_count() for u in self.monomials()), default=0)


def _mobius(values: np.ndarray, n: int) -> np.ndarray:
    a = np.array(values, dtype=np.uint8)
    for j in range(n):
        h = 1 << j
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
    return a


def anf_to_table(a: AnfPoly) -> BoolFn:
    return BoolFn(a.n, _mobius(np.array(a.coeffs, dtype=np.uint8), a.n))


def table_to_anf(f: BoolFn) -> AnfPoly:
    return AnfPoly(f.n, tuple(_mobius(f.table, f.n).tolist()))


def xor(f: BoolFn, g: BoolFn) -> BoolFn:
    if f.n != g.n:
        raise DimensionError(f"cannot combine functions of {f.n} and {g.n} variables")
    return BoolFn(f.n, f.table ^ g.table)


def dot_combine(z: int | Sequence[int], fs: Sequence[BoolFn]) -> BoolFn:
    """``XOR of fs[m]`` over the coordinates ``m`` with ``z_m = 1``."""
    if not fs:
        raise DimensionError("dot_combine needs at least one function")
    z = _as_vec(z, len(fs))
    n = fs[0].n
    acc = np.zeros(1 << n, dtype=np.uint8)
    for m, f in enumerate(fs):
        if f.n != n:
            raise DimensionError("functions must share the number of variables")
        if (z >> m) & 1:
            acc ^= f.table
    return BoolFn(n, acc)


# --- GF(2) matrices ---------------------------------------------------------


@dataclass(frozen=True)
class Gf2Matrix:
    """Square binary matrix; ``rows[i]`` is row ``i`` as a bitmask (bit ``j`` = entry ``(i, j)``)."""

    k: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.k:
            raise DimensionError(f"expected {self.k} rows, got {len(self.rows)}")
        if any(not 0 <= r < (1 << self.k) for r in self.rows):
            raise DimensionError("row does not fit in k columns")

    @classmethod
    def identity(cls, k: int) -> Gf2Matrix:
        return cls(k, tuple(1 << i for i in range(k)))

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> Gf2Matrix:
        return cls(len(bits), tuple(bits_to_int(r) for r in bits))

    def to_bits(self) -> list[list[int]]:
        return [list(int_to_bits(r, self.k)) for r in self.rows]

    def rank(self) -> int:
        work = list(self.rows)
        rank = 0
        for col in range(self.k):
            pivot = next((r for r in range(rank, self.k) if (work[r] >> col) & 1), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(self.k):
                if r != rank and (work[r] >> col) & 1:
                    work[r] ^= work[rank]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.rank() == self.k

    def row_mul(self, x: int) -> int:
        """Row vector times matrix: ``xS``."""
        out = 0
        i = 0
        while x:
            if x & 1:
                out ^= self.rows[i]
            x >>= 1
            i += 1
        return out

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.k != other.k:
            raise DimensionError("matrix dimensions differ")
        return Gf2Matrix(self.k, tuple(other.row_mul(r) for r in self.rows))


def gf2_invert(S: Gf2Matrix) -> Gf2Matrix:
    """Gauss-Jordan inverse over GF(2); raises ``SingularMatrixError``."""
    k = S.k
    # augmented rows: low k bits = S, high k bits = I
    work = [S.rows[i] | (1 << (k + i)) for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if (work[r] >> col) & 1), None)
        if pivot is None:
            raise SingularMatrixError()
        work[col], work[pivot] = work[pivot], work[col]
        for r in range(k):
            if r != col and (work[r] >> col) & 1:
                work[r] ^= work[col]
    return Gf2Matrix(k, tuple(w >> k for w in work))


def random_invertible(k: int, seed: int | np.random.Generator | None = None) -> Gf2Matrix:
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = np.random.default_rng(seed)
    while True:
        rows = tuple(int(r) for r in rng.integers(0, 1 << k, size=k))
        S = Gf2Matrix(k, rows)
        if S.is_invertible():
            return S


def linear_perm_apply(S: Gf2Matrix, d: int, x: int) -> int:
    """``x -> xS + d``."""
    return S.row_mul(_as_vec(x, S.k)) ^ _as_vec(d, S.k)


def linear_perm_inverse_apply(S: Gf2Matrix, d: int, x: int, S_inv: Gf2Matrix | None = None) -> int:
    """``x -> (x + d) S^{-1}``."""
    if S_inv is None:
        S_inv = gf2_invert(S)
    return S_inv.row_mul(_as_vec(x, S.k) ^ _as_vec(d, S.k))


# --- text formats -------------------------------------------------------------
#
# Truth table:   "n=<int>" on the first line, then 2^n characters from {0,1}.
# ANF:           "n=<int>" line (optional when parsing with n given), then a
#                sum of monomials:
#                    poly     := "0" | term ("+" term)*
#                    term     := "1" | var ("*" var)*
#                    var      := "x" <index>
#                "^" is accepted as a synonym of "+". Repeated terms cancel.


def format_table(f: BoolFn) -> str:
    return f"n={f.n}\n" + "".join(map(str, f.table.tolist())) + "\n"


def parse_table(text: str) -> BoolFn:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("truth table file must have exactly two non-empty lines")
    m = re.fullmatch(r"n\s*=\s*(\d+)", lines[0])
    if not m:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n = int(m.group(1))
    if not re.fullmatch(r"[01]*", lines[1]):
        raise ValueError("truth table must consist of 0/1 characters")
    return BoolFn(n, [int(c) for c in lines[1]])


def format_anf(a: AnfPoly, header: bool = True) -> str:
    terms = []
    for u in a.monomials():
        if u == 0:
            terms.append("1")
        else:
            terms.append("*".join(f"x{j}" for j in range(a.n) if (u >> j) & 1))
    # constant last, higher degree first reads naturally: "x0*x1 + x2 + 1"
    terms.sort(key=lambda t: (t == "1", -t.count("*"), t))
    body = " + ".join(terms) if terms else "0"
    return f"n={a.n}\n{body}\n" if header else body


def parse_anf(text: str, n: int | None = None) -> AnfPoly:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if lines and (m := re.fullmatch(r"n\s*=\s*(\d+)", lines[0])):
        n_hdr = int(m.group(1))
        if n is not None and n != n_hdr:
            raise DimensionError(f"header says n={n_hdr}, expected {n}")
        n = n_hdr
        lines = lines[1:]
    body = " ".join(lines).strip()
    if n is None:
        raise ValueError("number of variables unknown: add an 'n=' header or pass n")
    coeffs = [0] * (1 << n)
    if body in ("", "0"):
        return AnfPoly(n, tuple(coeffs))
    for raw in re.split(r"[+^]", body):
        term = raw.strip()
        if term == "1":
            coeffs[0] ^= 1
            continue
        u = 0
        for var in term.split("*"):
            var = var.strip()
            vm = re.fullmatch(r"x(\d+)", var)
            if not vm:
                raise ValueError(f"bad monomial factor: {var!r}")
            j = int(vm.group(1))
            if j >= n:
                raise DimensionError(f"variable x{j} out of range for n={n}")
            u |= 1 << j
        coeffs[u] ^= 1
    return AnfPoly(n, tuple(coeffs))
