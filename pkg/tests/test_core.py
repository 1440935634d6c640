import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert_tensors import (
    BudgetError,
    GeneratingVector,
    HilbertTensor,
    SequenceVector,
    SplitMix64,
    convolution_power,
    hankel_apply,
)


# -- entries ------------------------------------------------------------------


def test_entry_examples():
    assert HilbertTensor(2, 2).entry((1, 1)) == 1.0
    assert HilbertTensor(3, 3).entry((1, 2, 3)) == pytest.approx(0.25)
    assert HilbertTensor(2, 2).entry((2, 2)) == pytest.approx(1 / 3)


def test_entry_range_checks():
    t = HilbertTensor(3, 4)
    with pytest.raises(ValueError):
        t.entry((0, 1, 1))
    with pytest.raises(ValueError):
        t.entry((1, 1, 5))
    with pytest.raises(ValueError):
        t.entry((1, 1))


def test_entry_symmetry_and_bounds():
    t = HilbertTensor(4, 3)
    rng = SplitMix64(7)
    for _ in range(50):
        idx = tuple(1 + rng.randint(3) for _ in range(4))
        base = t.entry(idx)
        assert 0.0 < base <= 1.0
        perm = tuple(sorted(idx, reverse=bool(rng.randint(2))))
        assert t.entry(perm) == base


def test_infinite_tensor_entry_only():
    t = HilbertTensor.infinite(3)
    assert t.entry((10, 20, 30)) == pytest.approx(1.0 / 58)
    with pytest.raises(ValueError):
        t.apply_fast([1.0, 2.0])
    with pytest.raises(ValueError):
        t.materialize_dense()


def test_bad_constructor_args():
    with pytest.raises(ValueError):
        HilbertTensor(1, 3)
    with pytest.raises(ValueError):
        HilbertTensor(2, 0)


# -- generating vector ---------------------------------------------------------


def test_generating_vector_values():
    g = GeneratingVector.for_tensor(3, 4)
    assert len(g) == 3 * 3 + 1
    for s, v in enumerate(g.values):
        assert v == 1.0 / (s + 1)
    assert np.all(np.diff(g.values) < 0)
    assert np.all(g.values > 0)


def test_generating_vector_too_short():
    g = GeneratingVector.hilbert(3)
    with pytest.raises(ValueError, match="too short"):
        hankel_apply(g, [1.0, 1.0, 1.0], 2)


# -- sequence vector ------------------------------------------------------------


def test_sequence_vector_norms_and_cache():
    x = SequenceVector([3.0, -4.0])
    assert x.norm(2) == pytest.approx(5.0)
    assert x.norm(1) == pytest.approx(7.0)
    assert x._norms == {1.0: 7.0, 2.0: 5.0}
    assert len(x) == 2
    assert x[1] == -4.0
    with pytest.raises(ValueError):
        x.norm(0.5)


def test_zero_vector_norms():
    theta = SequenceVector([0.0, 0.0, 0.0])
    for p in (1, 2, 3.5):
        assert theta.norm(p) == 0.0


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=10),
    st.floats(1.0, 6.0),
    st.floats(0.0, 5.0),
)
def test_norm_ordering(values, r, extra):
    # ||x||_p <= ||x||_r <= n^(1/r - 1/p) ||x||_p for p > r >= 1
    p = r + extra + 1e-6
    x = SequenceVector(values)
    n = len(values)
    assert x.norm(p) <= x.norm(r) + 1e-9 * (1 + x.norm(r))
    assert x.norm(r) <= n ** (1 / r - 1 / p) * x.norm(p) * (1 + 1e-12) + 1e-9


# -- dense materialization -------------------------------------------------------


def test_materialize_m2_n2():
    dense = HilbertTensor(2, 2).materialize_dense()
    np.testing.assert_allclose(dense, [[1, 0.5], [0.5, 1 / 3]])


def test_materialize_m2_n1():
    np.testing.assert_allclose(HilbertTensor(2, 1).materialize_dense(), [[1.0]])


def test_materialize_m3_n2_entries():
    dense = HilbertTensor(3, 2).materialize_dense()
    expected = sorted([1, 0.5, 0.5, 1 / 3, 0.5, 1 / 3, 1 / 3, 0.25])
    assert sorted(dense.ravel().tolist()) == pytest.approx(expected)


def test_materialize_budget():
    with pytest.raises(BudgetError):
        HilbertTensor(2, 100).materialize_dense(max_elements=99)


def test_materialize_budget_env(monkeypatch):
    monkeypatch.setenv("HILBERT_MAX_ELEMENTS", "10")
    with pytest.raises(BudgetError):
        HilbertTensor(2, 4).materialize_dense()
    monkeypatch.setenv("HILBERT_MAX_ELEMENTS", "1000")
    assert HilbertTensor(2, 4).materialize_dense().shape == (4, 4)


def test_materialize_matches_entry():
    t = HilbertTensor(3, 3)
    dense = t.materialize_dense()
    for idx in itertools.product(range(1, 4), repeat=3):
        zero_based = tuple(i - 1 for i in idx)
        assert dense[zero_based] == pytest.approx(t.entry(idx))


# -- apply paths -----------------------------------------------------------------


def test_apply_naive_examples():
    t = HilbertTensor(2, 2)
    np.testing.assert_allclose(np.asarray(t.apply_naive([1.0, 0.0])), [1.0, 0.5])
    t = HilbertTensor(3, 1)
    np.testing.assert_allclose(np.asarray(t.apply_naive([3.0])), [9.0])
    t = HilbertTensor(3, 2)
    np.testing.assert_allclose(np.asarray(t.apply_naive([1.0, 1.0])), [7 / 3, 17 / 12])


def test_apply_fast_matches_naive_frozen():
    t = HilbertTensor(3, 2)
    np.testing.assert_allclose(t.apply_fast([1.0, 1.0]).values, [7 / 3, 17 / 12], rtol=1e-14)


def test_apply_dimension_mismatch():
    t = HilbertTensor(3, 4)
    with pytest.raises(ValueError, match="mismatch"):
        t.apply_fast([1.0, 2.0])
    with pytest.raises(ValueError, match="mismatch"):
        t.apply_naive([1.0, 2.0])


def test_apply_fast_zero_is_zero():
    t = HilbertTensor(4, 5)
    np.testing.assert_array_equal(t.apply_fast(np.zeros(5)).values, np.zeros(5))


def test_apply_fast_m2_is_matrix_product():
    rng = SplitMix64(3)
    for n in (1, 3, 7, 10):
        t = HilbertTensor(2, n)
        matrix = t.materialize_dense()
        x = np.array(rng.uniforms(n, -1, 1))
        np.testing.assert_allclose(t.apply_fast(x).values, matrix @ x, atol=1e-13)


def test_fast_naive_agreement_grid():
    rng = SplitMix64(11)
    for m in (2, 3, 4, 5):
        for n in (1, 2, 4, 6):
            t = HilbertTensor(m, n)
            for _ in range(5):
                x = np.array(rng.uniforms(n, -1, 1))
                naive = np.asarray(t.apply_naive(x))
                fast = t.apply_fast(x).values
                scale = 1.0 + np.max(np.abs(naive))
                assert np.max(np.abs(fast - naive)) <= 1e-12 * scale


@settings(max_examples=30, deadline=None)
@given(
    st.integers(2, 4),
    st.lists(st.floats(-1, 1, allow_nan=False), min_size=2, max_size=6),
    st.floats(0.1, 4.0),
)
def test_apply_homogeneity(m, values, c):
    t = HilbertTensor(m, len(values))
    base = t.apply_fast(values).values
    scaled = t.apply_fast(c * np.asarray(values)).values
    np.testing.assert_allclose(scaled, c ** (m - 1) * base, rtol=1e-11, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.lists(st.floats(0, 1, allow_nan=False), min_size=1, max_size=6))
def test_apply_strict_positivity(m, values):
    # strictly copositive: nonnegative nonzero input gives strictly positive
    # output; entries below 1e-6 are floored away so x**(m-1) cannot underflow
    x = np.asarray(values)
    if np.max(x, initial=0.0) < 1e-6:
        x = x.copy()
        x[0] = 0.5
    t = HilbertTensor(m, len(x))
    assert np.all(t.apply_fast(x).values > 0)


# -- quadratic forms ---------------------------------------------------------------


def test_quadratic_form_examples():
    assert HilbertTensor(2, 2).quadratic_form([1.0, 0.0]) == pytest.approx(1.0)
    assert HilbertTensor(3, 2).quadratic_form([1.0, 1.0]) == pytest.approx(15 / 4)


def test_quadratic_form_integral_examples():
    assert HilbertTensor(2, 1).quadratic_form_integral([1.0]) == pytest.approx(1.0)
    assert HilbertTensor(3, 2).quadratic_form_integral([1.0, 1.0]) == pytest.approx(15 / 4)
    assert HilbertTensor(2, 2).quadratic_form_integral([1.0, -1.0]) == pytest.approx(1 / 3)


def test_quadratic_form_exact_closed_forms():
    assert HilbertTensor(3, 2).quadratic_form([1, 1], exact=True) == Fraction(15, 4)
    assert HilbertTensor(3, 2).quadratic_form_integral([1, 1], exact=True) == Fraction(15, 4)
    assert HilbertTensor(2, 2).quadratic_form_integral([1, -1], exact=True) == Fraction(1, 3)


def test_quadratic_form_vs_integral_grid():
    rng = SplitMix64(23)
    for m in (2, 3, 4):
        for n in (1, 2, 3, 5):
            t = HilbertTensor(m, n)
            for _ in range(10):
                x = np.array(rng.uniforms(n, -1, 1))
                qf = t.quadratic_form(x)
                qi = t.quadratic_form_integral(x)
                assert abs(qf - qi) <= 1e-10 * (1 + abs(qi))


def test_quadratic_form_exact_equality():
    rng = SplitMix64(29)
    for m in (2, 3, 4):
        for n in (2, 4, 6):
            t = HilbertTensor(m, n)
            x = [Fraction(rng.randint(41) - 20, 1 + rng.randint(20)) for _ in range(n)]
            assert t.quadratic_form(x, exact=True) == t.quadratic_form_integral(x, exact=True)


def test_even_order_form_positive():
    rng = SplitMix64(31)
    t = HilbertTensor(4, 4)
    for _ in range(50):
        x = np.array(rng.uniforms(4, -1, 1))
        if not x.any():
            continue
        assert t.quadratic_form(x) > 0


# -- helpers ------------------------------------------------------------------------


def test_entry_sum_matches_dense():
    for m, n in ((2, 3), (3, 4), (4, 2)):
        t = HilbertTensor(m, n)
        assert t.entry_sum() == pytest.approx(t.materialize_dense().sum(), rel=1e-12)


def test_convolution_power_fft_path_matches_direct():
    # size^2 * (k-1) above the threshold, so this exercises the rFFT branch
    rng = SplitMix64(37)
    x = np.array(rng.uniforms(1600, -1, 1))
    direct = np.convolve(np.convolve(x, x), x)
    fast = convolution_power(x, 3)
    np.testing.assert_allclose(fast, direct, atol=1e-9 * (1 + np.abs(direct).max()))
