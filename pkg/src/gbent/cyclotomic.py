"""Exact arithmetic in Z[zeta_q] for q = 2^p.

The minimal polynomial of a primitive 2^p-th root of unity is x^h + 1 with
h = 2^(p-1), so an element is stored as ``h`` integer coefficients of
``1, zeta, ..., zeta^(h-1)`` and products reduce with ``zeta^h = -1``.
"""

from __future__ import annotations

import cmath
from typing import Iterable

import numpy as np

__all__ = ["CycInt", "cyc_norm_sq", "negacyclic_mul", "negacyclic_norm_sq"]


def _half(p: int) -> int:
    if p < 1:
        raise ValueError("p must be >= 1 (q = 2^p >= 2)")
    return 1 << (p - 1)


class CycInt:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]) -> None:
        h = _half(p)
        c = tuple(int(x) for x in coeffs)
        if len(c) != h:
            raise ValueError(f"expected {h} coefficients for q=2^{p}, got {len(c)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @property
    def q(self) -> int:
        return 1 << self.p

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls(p, [0] * _half(p))

    @classmethod
    def from_int(cls, p: int, c: int) -> CycInt:
        h = _half(p)
        return cls(p, [c] + [0] * (h - 1))

    @classmethod
    def zeta_power(cls, p: int, m: int) -> CycInt:
        """``zeta^m`` for any integer ``m``."""
        h = _half(p)
        m %= 2 * h
        c = [0] * h
        if m < h:
            c[m] = 1
        else:
            c[m - h] = -1
        return cls(p, c)

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError("operands live in different cyclotomic rings")
            return other
        if isinstance(other, (int, np.integer)):
            return CycInt.from_int(self.p, int(other))
        return NotImplemented

    def __add__(self, other) -> CycInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other) -> CycInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> CycInt:
        return (-self) + other

    def __mul__(self, other) -> CycInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        h = len(self.coeffs)
        out = [0] * h
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                m = i + j
                if m < h:
                    out[m] += a * b
                else:
                    out[m - h] -= a * b
        return CycInt(self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, coeffs={list(self.coeffs)})"

    def conj(self) -> CycInt:
        """Complex conjugate: ``zeta^m -> zeta^(q-m) = -zeta^(h-m)`` for ``m > 0``."""
        c = self.coeffs
        h = len(c)
        out = [0] * h
        out[0] = c[0]
        for m in range(1, h):
            out[h - m] = -c[m]
        return CycInt(self.p, out)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_complex(self) -> complex:
        zeta = cmath.exp(2j * cmath.pi / self.q)
        return sum(c * zeta**m for m, c in enumerate(self.coeffs))


def cyc_norm_sq(z: CycInt) -> CycInt:
    """``z * conj(z)`` reduced in the ring; rational for every ``z``."""
    return z * z.conj()


# --- vectorised helpers over arrays of shape (..., h) --------------------------


def negacyclic_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched product in Z[x]/(x^h + 1) along the last axis."""
    h = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
    for i in range(h):
        ai = a[..., i : i + 1]
        # b shifted by i with sign flip on wrap-around
        out[..., i:] += ai * b[..., : h - i]
        if i:
            out[..., :i] -= ai * b[..., h - i :]
    return out


def negacyclic_conj(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[..., 0] = a[..., 0]
    if a.shape[-1] > 1:
        out[..., 1:] = -a[..., :0:-1]
    return out


def negacyclic_norm_sq(a: np.ndarray) -> np.ndarray:
    return negacyclic_mul(a, negacyclic_conj(a))
