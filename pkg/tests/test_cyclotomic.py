import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gbent.cyclotomic import CycInt, cyc_norm_sq, negacyclic_mul, negacyclic_norm_sq


def cycints(p=None):
    ps = st.just(p) if p is not None else st.integers(1, 4)
    return ps.flatmap(
        lambda p: st.lists(st.integers(-50, 50), min_size=1 << (p - 1), max_size=1 << (p - 1)).map(
            lambda c: CycInt(p, c)
        )
    )


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_unit_has_norm_one(p):
    for m in range(-3, 2 * (1 << p)):
        assert cyc_norm_sq(CycInt.zeta_power(p, m)) == CycInt.from_int(p, 1)


def test_one_plus_minus_one_vanishes():
    z = CycInt.from_int(1, 1) + CycInt.zeta_power(1, 1)
    assert z == CycInt.zero(1)
    assert cyc_norm_sq(z) == CycInt.zero(1)


def test_zeta_power_reduction():
    # q = 8: zeta^4 = -1, zeta^5 = -zeta, zeta^8 = 1
    assert CycInt.zeta_power(3, 4) == CycInt(3, [-1, 0, 0, 0])
    assert CycInt.zeta_power(3, 5) == CycInt(3, [0, -1, 0, 0])
    assert CycInt.zeta_power(3, 8) == CycInt.from_int(3, 1)
    assert CycInt.zeta_power(3, 1) * CycInt.zeta_power(3, 7) == CycInt.from_int(3, 1)


def test_norm_of_one_plus_i():
    # q = 4, zeta = i: |1 + i|^2 = 2
    z = CycInt(2, [1, 1])
    assert cyc_norm_sq(z) == CycInt(2, [2, 0])


@given(cycints())
def test_norm_matches_floating(z):
    # real, though not always rational: zeta - zeta^3 = sqrt(2) when q = 8
    n = cyc_norm_sq(z)
    assert n.conj() == n
    expect = abs(z.to_complex()) ** 2
    assert n.to_complex() == pytest.approx(expect, rel=1e-9, abs=1e-9)


@given(cycints(3), cycints(3), cycints(3))
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == CycInt.zero(3)


@given(cycints(), st.data())
def test_multiplication_matches_complex(a, data):
    b = data.draw(cycints(a.p))
    assert (a * b).to_complex() == pytest.approx(a.to_complex() * b.to_complex(), rel=1e-9, abs=1e-6)


@given(cycints())
def test_conj_matches_complex(z):
    assert z.conj().to_complex() == pytest.approx(z.to_complex().conjugate(), abs=1e-9)


def test_conj_rule():
    # zeta^m -> zeta^(q-m)
    for p in range(1, 5):
        q = 1 << p
        for m in range(q):
            assert CycInt.zeta_power(p, m).conj() == CycInt.zeta_power(p, q - m)


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        CycInt.zero(2) + CycInt.zero(3)
    with pytest.raises(ValueError):
        CycInt(3, [1, 2])


def test_vectorised_helpers_match_scalar(rng):
    for p in range(1, 6):
        h = 1 << (p - 1)
        a = rng.integers(-9, 10, size=(20, h))
        b = rng.integers(-9, 10, size=(20, h))
        prod = negacyclic_mul(a, b)
        norms = negacyclic_norm_sq(a)
        for i in range(20):
            za, zb = CycInt(p, a[i]), CycInt(p, b[i])
            assert list((za * zb).coeffs) == prod[i].tolist()
            assert list(cyc_norm_sq(za).coeffs) == norms[i].tolist()


def test_to_complex_value():
    z = CycInt(3, [1, 2, 0, -1])
    zeta = cmath.exp(2j * cmath.pi / 8)
    assert z.to_complex() == pytest.approx(1 + 2 * zeta - zeta**3)
    assert np.isclose(CycInt.zeta_power(4, 3).to_complex(), cmath.exp(2j * cmath.pi * 3 / 16))
