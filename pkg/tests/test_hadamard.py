import itertools

import numpy as np
import pytest

from gbent.boolean import DimensionError
from gbent.hadamard import NoMatch, RowMatch, hadamard_matrix, hadamard_row, match_row


def test_small_rows():
    assert hadamard_row(2, 0).tolist() == [1, 1, 1, 1]
    assert hadamard_row(2, 1).tolist() == [1, -1, 1, -1]
    assert hadamard_row(2, 2).tolist() == [1, 1, -1, -1]
    assert hadamard_row(2, 3).tolist() == [1, -1, -1, 1]
    assert hadamard_row(3, 1).tolist() == [1, -1] * 4


def test_rows_agree_with_kronecker_matrix():
    for m in range(0, 7):
        H = hadamard_matrix(m)
        for r in range(1 << m):
            assert np.array_equal(H[r], hadamard_row(m, r))


@pytest.mark.parametrize("m", range(0, 6))
def test_orthogonality(m):
    H = hadamard_matrix(m)
    assert np.array_equal(H @ H.T, (1 << m) * np.eye(1 << m, dtype=np.int64))


def test_row_index_validated():
    with pytest.raises(ValueError):
        hadamard_row(2, 4)
    with pytest.raises(ValueError):
        hadamard_row(-1, 0)


def test_rows_are_read_only():
    with pytest.raises(ValueError):
        hadamard_row(3, 2)[0] = 5


@pytest.mark.parametrize("m", range(0, 7))
def test_match_round_trip(m):
    for r, sign, scale in itertools.product(range(1 << m), (1, -1), (1, 4, 8)):
        got = match_row(sign * scale * hadamard_row(m, r))
        assert got == RowMatch(sign, scale, r, m)


def test_match_examples():
    m = match_row([-8, 8, -8, 8, -8, 8, -8, 8])
    assert m and m.tag() == "-8H^(1)_8"
    assert m.b == 1 and m.a == (1, 0, 0)
    assert np.array_equal(m.vector(), [-8, 8, -8, 8, -8, 8, -8, 8])
    assert match_row([-8, -8, 8, 8, -8, -8, 8, 8]).tag() == "-8H^(2)_8"
    assert match_row([4, -4]).tag() == "4H^(1)_2"


def test_match_failures():
    assert match_row([0, 0, 0, 0]) == NoMatch("zero-vector")
    assert not match_row([0, 0, 0, 0])
    assert match_row([8, 8, 8, -4]) == NoMatch("not-a-row")
    assert match_row([0, 8, 8, 8]) == NoMatch("not-a-row")
    # consistent on unit positions but wrong at index 3
    assert match_row([1, -1, -1, -1]) == NoMatch("not-a-row")


def test_match_length_must_be_power_of_two():
    with pytest.raises(DimensionError):
        match_row([1, 1, 1])


def test_match_rejects_all_non_rows_size4():
    rows = {tuple((s * hadamard_row(2, r)).tolist()) for r in range(4) for s in (1, -1)}
    for v in itertools.product((1, -1), repeat=4):
        assert bool(match_row(v)) == (tuple(v) in rows)
