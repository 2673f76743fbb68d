"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import time
from contextlib import contextmanager

import numpy as np

from gbent.boolean import BoolFn, random_invertible
from gbent.construct import (
    PRESETS,
    MmMap,
    build_components,
    construct_gbent_even,
    construct_gbent_odd,
    pp0_spectrum,
    random_spec,
    semibent_from_map,
)
from gbent.cyclotomic import CycInt, cyc_norm_sq
from gbent.enumeration import function_at
from gbent.spectral import GenFn, classify, decompose, fwht, gwht
from gbent.verify import (
    build_family,
    check,
    check_odd,
    disjoint_structure_check,
    format_report,
    is_gbent_direct,
    report_table,
)

from .conftest import ACCEPTANCE_LINES, DATA, EXAMPLE_VALUES, naive_wht_matrix

PRESET = PRESETS["paper-example-n5-q32"]


@contextmanager
def criterion(number: int, name: str, limit: float | None):
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        in_time = limit is None or elapsed < limit
        verdict = "PASS" if state["ok"] and in_time else "FAIL"
        limit_txt = f" (limit {limit:g}s)" if limit is not None else ""
        extra = f" {state['detail']}" if state["detail"] else ""
        line = f"[{verdict}] criterion {number}: {name}: {elapsed:.2f}s{limit_txt}{extra}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert state["ok"], line
    assert in_time, line


def test_criterion_1_table_reproduction():
    with criterion(1, "W(u) table for the n=5, q=32 preset", 1.0) as st:
        text = format_report(report_table(build_components(PRESET)))
        golden = (DATA / "preset_report_golden.txt").read_text()
        rows = text.splitlines()
        st["ok"] = text == golden and rows[1].endswith("{0_8, -8H^(1)_8}") and rows[6].endswith("{-8H^(2)_8, 0_8}")
        st["detail"] = f"{sum(a == b for a, b in zip(rows, golden.splitlines()))}/32 rows match"


def test_criterion_2_output_sequence():
    with criterion(2, "preset output sequence", 1.0) as st:
        g = construct_gbent_odd(PRESET)
        st["ok"] = tuple(g.values.tolist()) == EXAMPLE_VALUES


def test_criterion_3_exact_norms():
    with criterion(3, "exact |H(w)|^2 = 32 for the preset", 1.0) as st:
        spec = gwht(construct_gbent_odd(PRESET))
        target = CycInt.from_int(5, 32)
        norms = [cyc_norm_sq(z) for z in spec.exact]
        st["ok"] = len(norms) == 32 and all(z == target for z in norms)


def test_criterion_4_exhaustive_equivalence():
    with criterion(4, "component test equals direct test, (2,4) and (3,4) exhaustive", 60.0) as st:
        agree, total, bent_set_ok = 0, 0, True
        for n in (2, 3):
            for idx in range(4 ** (1 << n)):
                g = function_at(n, 4, idx)
                fam = build_family(g)
                direct = is_gbent_direct(g)
                agree += check(fam).is_gbent == direct
                total += 1
                if n == 2:
                    a0, a1 = decompose(g)
                    expect = classify(a1).kind == "bent" and classify(a1 ^ a0).kind == "bent"
                    bent_set_ok &= expect == direct
        st["ok"] = agree == total == 256 + 65536 and bent_set_ok
        st["detail"] = f"{agree}/{total} agree"


def test_criterion_5_pp0_closed_form():
    with criterion(5, "closed-form MM spectrum equals FWHT", 30.0) as st:
        rng = np.random.default_rng(5)
        perms, bad = 0, 0
        while perms < 120:
            k = 1 + perms % 4
            pi = tuple(int(v) for v in rng.permutation(1 << k))
            for j in (0, 1):
                m = MmMap(k, j, pi)
                W = fwht(semibent_from_map(m)).values
                inv = m.inverse()
                mask = (1 << k) - 1
                bad += sum(pp0_spectrum(m, u & mask, u >> k, inv) != W[u] for u in range(W.size))
            perms += 1
        st["ok"] = bad == 0
        st["detail"] = f"{perms} permutations x 2 classes, {bad} mismatches"


def test_criterion_6_construction_sweep():
    with criterion(6, "100 random odd-n constructions", 300.0) as st:
        rng = np.random.default_rng(6)
        passed = 0
        for i in range(100):
            k, p = 1 + i % 5, 2 + (i // 5) % 4
            spec = random_spec(k, p, rng)
            fam = build_components(spec)
            passed += check_odd(fam).is_gbent and is_gbent_direct(fam.to_genfn()) and disjoint_structure_check(fam)
        st["ok"] = passed == 100
        st["detail"] = f"{passed}/100"


def test_criterion_7_even_sweep():
    with criterion(7, "50 random even-n constructions", 120.0) as st:
        rng = np.random.default_rng(7)
        qs = (2, 4, 6, 8, 16)
        passed = 0
        for i in range(50):
            k, q = 1 + i % 5, qs[(i // 5) % 5]
            g_y = GenFn(k, q, rng.integers(0, q, size=1 << k))
            f = construct_gbent_even(k, q, g_y, random_invertible(k, rng), int(rng.integers(0, 1 << k)))
            passed += is_gbent_direct(f)
        st["ok"] = passed == 50
        st["detail"] = f"{passed}/50"


def test_criterion_8_transform_correctness():
    with criterion(8, "FWHT equals the naive transform, Parseval", 30.0) as st:
        rng = np.random.default_rng(8)
        mats = {n: naive_wht_matrix(n) for n in range(1, 11)}
        good = 0
        for i in range(500):
            n = 1 + i % 10
            f = BoolFn(n, rng.integers(0, 2, size=1 << n))
            W = fwht(f)
            good += bool(np.array_equal(W.values, mats[n] @ f.sequence()) and W.parseval_ok())
        st["ok"] = good == 500
        st["detail"] = f"{good}/500"


def test_criterion_9_fwht_speed():
    f = BoolFn(22, np.random.default_rng(9).integers(0, 2, size=1 << 22))
    with criterion(9, "FWHT at n=22", 2.0) as st:
        W = fwht(f)
        st["ok"] = W.values.size == 1 << 22 and int(W.values[0]) == (1 << 22) - 2 * f.weight()
