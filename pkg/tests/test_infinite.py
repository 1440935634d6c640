import math

import numpy as np
import pytest

from hilbert_tensors import (
    PI_OVER_SQRT6,
    HilbertTensor,
    SplitMix64,
    apply_infinite,
    f_infinity,
    norm_search,
    operator_norm_constant,
    t_infinity,
)


def unit_l1(x):
    x = np.asarray(x, dtype=float)
    return x / np.abs(x).sum()


# -- truncated apply -------------------------------------------------------------


def test_apply_infinite_e1_harmonic():
    for m in (2, 3, 4):
        out = apply_infinite([1.0], m, 50).values
        np.testing.assert_allclose(out, 1.0 / np.arange(1, 51), rtol=1e-12)


def test_apply_infinite_e2_shifted():
    out = apply_infinite([0.0, 1.0], 2, 30).values
    np.testing.assert_allclose(out, 1.0 / np.arange(2, 32), rtol=1e-12)


def test_apply_infinite_zero():
    out = apply_infinite(np.zeros(4), 3, 20).values
    np.testing.assert_array_equal(out, np.zeros(20))


def test_apply_infinite_matches_finite_head():
    # with out_len = support the truncation reproduces the finite tensor
    rng = SplitMix64(61)
    x = np.array(rng.uniforms(6, -1, 1))
    t = HilbertTensor(3, 6)
    np.testing.assert_allclose(
        apply_infinite(x, 3, 6).values, t.apply_fast(x).values, rtol=1e-12
    )


def test_apply_infinite_m2_dense_cross_check():
    # H_inf restricted to 400 rows and 50 columns as a dense matrix
    rng = SplitMix64(67)
    x = np.array(rng.uniforms(50, -1, 1))
    rows = np.arange(1, 401)[:, None]
    cols = np.arange(1, 51)[None, :]
    dense = 1.0 / (rows + cols - 1)
    np.testing.assert_allclose(apply_infinite(x, 2, 400).values, dense @ x, atol=1e-12)


# -- certified norms --------------------------------------------------------------


def test_t_infinity_rejects_bad_p():
    with pytest.raises(ValueError, match="p > 1"):
        t_infinity([1.0], 2, 1.0)


def test_t_infinity_zero_vector_exact():
    cert = t_infinity(np.zeros(3), 3, 2.0)
    assert cert.value == 0.0 and cert.tail_bound == 0.0


def test_t_infinity_e1_value():
    n = 10_000
    cert = t_infinity([1.0], 2, 2.0, out_len=n)
    expected = math.sqrt(sum(1.0 / i**2 for i in range(1, n + 1)))
    assert cert.value == pytest.approx(expected, rel=1e-12)
    assert cert.value <= PI_OVER_SQRT6 <= cert.upper


def test_t_infinity_e1_any_order():
    # T e_1 has components 1/i regardless of m, because ||e_1||_1 = 1
    for m in (2, 3, 4):
        cert = t_infinity([1.0], m, 2.0, out_len=2000)
        ref = t_infinity([1.0], 2, 2.0, out_len=2000)
        assert cert.value == pytest.approx(ref.value, rel=1e-12)


def test_t_infinity_positive_homogeneity():
    x = unit_l1([0.3, 0.5, 0.2])
    base = t_infinity(x, 3, 2.0, out_len=500)
    scaled = t_infinity(4.0 * x, 3, 2.0, out_len=500)
    assert scaled.value == pytest.approx(4.0 * base.value, rel=1e-12)


def test_t_infinity_tail_decreases():
    x = unit_l1([1.0, 2.0])
    t_small = t_infinity(x, 2, 2.0, out_len=100)
    t_large = t_infinity(x, 2, 2.0, out_len=10_000)
    assert t_large.tail_bound < t_small.tail_bound


def test_certified_containment():
    rng = SplitMix64(71)
    for m, make in ((2, t_infinity), (3, t_infinity), (3, f_infinity), (4, f_infinity)):
        p = 2.0 if make is t_infinity else 2.0 * (m - 1)
        for _ in range(5):
            x = unit_l1(np.array(rng.uniforms(8, -1, 1)))
            coarse = make(x, m, p, out_len=200)
            fine = make(x, m, p, out_len=5000)
            assert coarse.value <= fine.value + 1e-12
            assert fine.value <= coarse.upper + 1e-12
            assert fine.upper <= coarse.upper + 1e-12


def test_f_infinity_rejects_bad_p():
    with pytest.raises(ValueError, match="m-1"):
        f_infinity([1.0], 3, 1.5)


def test_f_infinity_e1_value():
    # ||F e_1||_{2(m-1)} = (sum i^-2)^(1/(2(m-1)))
    n = 5000
    partial = sum(1.0 / i**2 for i in range(1, n + 1))
    for m in (2, 3, 4):
        p = 2.0 * (m - 1)
        cert = f_infinity([1.0], m, p, out_len=n)
        assert cert.value == pytest.approx(partial ** (1.0 / p), rel=1e-12)


def test_f_infinity_nonnegative_output_head():
    # for odd m the inner contraction is a moment integral, nonnegative for any x
    rng = SplitMix64(73)
    for _ in range(10):
        x = np.array(rng.uniforms(6, -1, 1))
        head = apply_infinite(x, 3, 200).values
        assert np.all(head >= -1e-12)
        cert = f_infinity(x, 3, 4.0, out_len=200)
        assert cert.value >= 0


def test_norm_bound_random_unit_vectors():
    rng = SplitMix64(79)
    for m in (2, 3):
        for _ in range(25):
            x = unit_l1(np.array(rng.uniforms(10, -1, 1)))
            ct = t_infinity(x, m, 2.0, out_len=100_000)
            assert ct.upper <= PI_OVER_SQRT6 + 1e-9
            cf = f_infinity(x, m, 2.0 * (m - 1), out_len=100_000)
            assert cf.upper <= PI_OVER_SQRT6 + 1e-9


def test_boundedness_constant():
    # ||T x||_p <= M ||x||_1 with M = (sum i^-p)^(1/p)
    rng = SplitMix64(83)
    for p in (1.5, 2.0, 3.0):
        M = operator_norm_constant("T", 2, p)
        for _ in range(10):
            x = np.array(rng.uniforms(6, -1, 1))
            cert = t_infinity(x, 2, p, out_len=20_000)
            assert cert.upper <= M * np.abs(x).sum() + 1e-9


def test_operator_norm_constant_closed_forms():
    assert operator_norm_constant("T", 2, 2.0) == PI_OVER_SQRT6
    assert operator_norm_constant("F", 3, 4.0) == pytest.approx((math.pi**2 / 6) ** 0.25)
    with pytest.raises(ValueError):
        operator_norm_constant("T", 2, 0.5)
    with pytest.raises(ValueError):
        operator_norm_constant("Q", 2, 2.0)


# -- norm search ------------------------------------------------------------------


def test_norm_search_support_one_is_e1():
    rep = norm_search(2, 2.0, trials=10, support=1, out_len=2000, seed=5)
    assert rep.best_vector == [1.0]


def test_norm_search_coordinate_decay():
    # ||T e_k||_2 decreases in k, so e_1 beats the other coordinates
    vals = [t_infinity(np.eye(5)[k], 2, 2.0, out_len=2000).value for k in range(5)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_norm_search_finds_e1():
    rep = norm_search(2, 2.0, trials=60, support=8, out_len=1_000_000, seed=6)
    assert rep.best_value >= PI_OVER_SQRT6 - 1e-6
    assert rep.best_value <= PI_OVER_SQRT6 + 1e-9
    assert np.argmax(np.abs(rep.best_vector)) == 0


def test_norm_search_deterministic():
    a = norm_search(3, 2.0, trials=40, support=6, out_len=1000, seed=9)
    b = norm_search(3, 2.0, trials=40, support=6, out_len=1000, seed=9)
    assert a == b


def test_norm_search_never_exceeds_bound():
    for op in ("T", "F"):
        p = 2.0 if op == "T" else 4.0
        rep = norm_search(3, p, trials=80, support=6, out_len=5000, seed=10, operator=op)
        assert rep.best_value <= PI_OVER_SQRT6 + 1e-9
