"""Hilbert tensors and their Hankel-structured evaluation paths.

The order-m, dimension-n Hilbert tensor has entries 1/(i_1 + ... + i_m - m + 1)
for 1-based indices.  Because every entry depends only on the index sum, the
tensor is Hankel: it is fully described by the generating sequence
v[s] = 1/(s + 1) over 0-based offsets s, and tensor-vector contraction reduces
to a self-convolution of the input followed by one correlation against v.

Three routes compute the same contraction and quadratic form:

* ``apply_naive`` / ``quadratic_form`` via the literal multi-index sum,
* ``apply_fast`` via convolution powers (quasi-linear in n),
* ``quadratic_form_integral`` via polynomial expansion of
  integral(0,1) (sum_i x_i t^(i-1))^m dt, optionally in exact rationals.

They are kept deliberately redundant; the test suite holds them against each
other and against the brute-force oracle module.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DEFAULT_MAX_ELEMENTS = 10_000_000

# Above this a * b cost, convolutions go through a power-of-two rFFT.
_FFT_PRODUCT_THRESHOLD = 1 << 22


class BudgetError(RuntimeError):
    """A dense computation would exceed the configured element budget."""


def max_elements_budget(override: int | None = None) -> int:
    """Dense element budget: explicit override, else HILBERT_MAX_ELEMENTS, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get("HILBERT_MAX_ELEMENTS")
    return int(env) if env else DEFAULT_MAX_ELEMENTS


class SequenceVector:
    """Finite real vector with cached p-norms.

    Stands for an element of R^n, or for a finitely supported element of l^1.
    Values are immutable after construction; norms are computed once per
    exponent and cached.
    """

    __slots__ = ("values", "_norms")

    def __init__(self, values):
        v = np.array(values, dtype=float)
        if v.ndim != 1:
            raise ValueError(f"expected a 1-d vector, got shape {v.shape}")
        v.setflags(write=False)
        self.values = v
        self._norms: dict[float, float] = {}

    def __len__(self) -> int:
        return self.values.size

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __repr__(self) -> str:
        return f"SequenceVector({self.values.tolist()!r})"

    def norm(self, p: float) -> float:
        if p < 1:
            raise ValueError(f"p-norms are defined here for p >= 1, got {p}")
        key = float(p)
        if key not in self._norms:
            if self.values.size == 0:
                self._norms[key] = 0.0
            else:
                self._norms[key] = float(np.linalg.norm(self.values, ord=key))
        return self._norms[key]


def as_vector(x) -> np.ndarray:
    """Coerce SequenceVector / array-like to a 1-d float array."""
    if isinstance(x, SequenceVector):
        return x.values
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-d vector, got shape {v.shape}")
    return v


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    """Hankel generating sequence with values[s] = 1/(s+1) at offset s."""

    values: np.ndarray

    @classmethod
    def hilbert(cls, length: int) -> "GeneratingVector":
        if length < 1:
            raise ValueError("generating vector needs length >= 1")
        values = 1.0 / np.arange(1, length + 1)
        values.setflags(write=False)
        return cls(values)

    @classmethod
    def for_tensor(cls, order: int, dim: int) -> "GeneratingVector":
        # Offsets reach (dim-1)*order, i.e. denominators reach dim*order - order + 1.
        return cls.hilbert(order * (dim - 1) + 1)

    def __len__(self) -> int:
        return len(self.values)


def _pow2_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out_len = len(a) + len(b) - 1
    size = 1 << (out_len - 1).bit_length()
    fa = np.fft.rfft(a, size)
    fb = np.fft.rfft(b, size)
    return np.fft.irfft(fa * fb, size)[:out_len]


def convolve(a, b) -> np.ndarray:
    """Full linear convolution; direct for small sizes, rFFT beyond."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size * b.size <= _FFT_PRODUCT_THRESHOLD:
        return np.convolve(a, b)
    return _pow2_convolve(a, b)


def convolution_power(x, k: int) -> np.ndarray:
    """k-fold self-convolution of x (k >= 1)."""
    x = np.asarray(x, dtype=float)
    if k < 1:
        raise ValueError("convolution power needs k >= 1")
    if k == 1:
        return x.copy()
    out_len = k * (x.size - 1) + 1
    if x.size**2 * (k - 1) <= _FFT_PRODUCT_THRESHOLD:
        y = x
        for _ in range(k - 1):
            y = np.convolve(y, x)
        return y
    size = 1 << (out_len - 1).bit_length()
    fx = np.fft.rfft(x, size)
    return np.fft.irfft(fx**k, size)[:out_len]


def hankel_apply(gen, x, order: int, out_len: int | None = None) -> np.ndarray:
    """Contract a Hankel tensor with generating sequence ``gen`` against x.

    Computes out[i] = sum_s gen[i + s] * y[s] for 0-based i < out_len, where
    y is the (order-1)-fold self-convolution of x.  ``gen`` must cover offsets
    up to out_len - 1 + (order-1)*(len(x)-1).

    Any generating sequence is accepted; nothing here is specific to the
    Hilbert choice gen[s] = 1/(s+1).
    """
    v = gen.values if isinstance(gen, GeneratingVector) else np.asarray(gen, dtype=float)
    xv = as_vector(x)
    if xv.size == 0:
        raise ValueError("empty input vector")
    n_out = xv.size if out_len is None else int(out_len)
    if n_out < 1:
        raise ValueError("out_len must be >= 1")
    y = convolution_power(xv, order - 1)
    need = n_out + y.size - 1
    if v.size < need:
        raise ValueError(f"generating vector too short: need {need}, have {v.size}")
    full = convolve(v[:need], y[::-1])
    return full[y.size - 1 : y.size - 1 + n_out]


def _exact_values(x) -> list[Fraction]:
    xv = x.values if isinstance(x, SequenceVector) else x
    return [Fraction(v) for v in xv]


def _exact_convolve(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class HilbertTensor:
    """Symmetric order-m tensor with entries 1/(i_1 + ... + i_m - m + 1).

    ``dim=None`` stands for the infinite-dimensional tensor; only ``entry``
    is meaningful then, the truncated operators live in
    :mod:`hilbert_tensors.infinite`.
    """

    order: int
    dim: int | None

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"order must be >= 2, got {self.order}")
        if self.dim is not None and self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")

    @classmethod
    def infinite(cls, order: int) -> "HilbertTensor":
        return cls(order, None)

    def _require_finite(self) -> int:
        if self.dim is None:
            raise ValueError("operation needs a finite-dimensional tensor")
        return self.dim

    # -- entries ------------------------------------------------------------

    def entry(self, idx) -> float:
        """Entry at a 1-based index tuple of length ``order``."""
        idx = tuple(idx)
        if len(idx) != self.order:
            raise ValueError(f"need {self.order} indices, got {len(idx)}")
        for i in idx:
            if i < 1 or (self.dim is not None and i > self.dim):
                raise ValueError(f"index {i} out of range 1..{self.dim}")
        return 1.0 / (sum(idx) - self.order + 1)

    def generating_vector(self) -> GeneratingVector:
        return GeneratingVector.for_tensor(self.order, self._require_finite())

    def entry_sum(self) -> float:
        """Sum of all n^m entries, in closed form from the generating vector."""
        n = self._require_finite()
        counts = convolution_power(np.ones(n), self.order)
        return float(counts @ (1.0 / np.arange(1, counts.size + 1)))

    def materialize_dense(self, max_elements: int | None = None) -> np.ndarray:
        """Dense m-way array of entries; refuses above the element budget."""
        n = self._require_finite()
        budget = max_elements_budget(max_elements)
        if n**self.order > budget:
            raise BudgetError(
                f"dense tensor holds {n**self.order} elements, budget is {budget}"
            )
        offsets = np.arange(n, dtype=np.int64)
        total = offsets
        for _ in range(self.order - 1):
            total = np.add.outer(total, offsets)
        return 1.0 / (total + 1.0)

    # -- tensor-vector contraction -------------------------------------------

    def _check_dim(self, xv) -> None:
        n = self._require_finite()
        if len(xv) != n:
            raise ValueError(f"dimension mismatch: tensor dim {n}, vector length {len(xv)}")

    def apply_naive(self, x, exact: bool = False):
        """(H_n x^{m-1})_i by the literal (m-1)-fold index sum.

        With ``exact=True`` the input entries are taken as exact rationals and
        a list of Fractions is returned.
        """
        n = self._require_finite()
        m = self.order
        if exact:
            xs = _exact_values(x)
            zero = Fraction(0)
        else:
            xs = [float(v) for v in as_vector(x)]
            zero = 0.0
        self._check_dim(xs)
        out = [zero] * n
        for tail in itertools.product(range(1, n + 1), repeat=m - 1):
            prod = xs[tail[0] - 1]
            s = tail[0]
            for j in tail[1:]:
                prod = prod * xs[j - 1]
                s += j
            for i in range(1, n + 1):
                out[i - 1] += prod / (i + s - m + 1)
        return out if exact else SequenceVector(out)

    def apply_fast(self, x) -> SequenceVector:
        """Same value as ``apply_naive`` via convolution power + correlation.

        Cost is O(m n log(m n)) against the naive O(n^m).
        """
        xv = as_vector(x)
        self._check_dim(xv)
        return SequenceVector(hankel_apply(self.generating_vector(), xv, self.order))

    def quadratic_form(self, x, exact: bool = False):
        """x^T (H_n x^{m-1}), the degree-m homogeneous form.

        The float route goes through ``apply_fast``.  The exact route repeats
        the same contract-then-dot structure in rational arithmetic.
        """
        if exact:
            xs = _exact_values(x)
            self._check_dim(xs)
            m = self.order
            y = xs
            for _ in range(m - 2):
                y = _exact_convolve(y, xs)
            total = Fraction(0)
            for i, xi in enumerate(xs):
                if xi == 0:
                    continue
                row = sum((ys / (i + s + 1) for s, ys in enumerate(y)), Fraction(0))
                total += xi * row
            return total
        xv = as_vector(x)
        return float(xv @ self.apply_fast(xv).values)

    def quadratic_form_integral(self, x, exact: bool = False):
        """The same form as integral(0,1) of (sum_i x_i t^(i-1))^m dt.

        Expands the m-th power of the coefficient polynomial and integrates
        term by term: sum_k c_k / (k+1).  Serves as the independent oracle
        for ``quadratic_form``; with ``exact=True`` all arithmetic is in
        Fractions and the result is exact for the given binary-float inputs.
        """
        m = self.order
        if exact:
            coeffs = _exact_values(x)
            self._check_dim(coeffs)
            c = coeffs
            for _ in range(m - 1):
                c = _exact_convolve(c, coeffs)
            return sum((ck / (k + 1) for k, ck in enumerate(c)), Fraction(0))
        xv = as_vector(x)
        self._check_dim(xv)
        c = xv
        for _ in range(m - 1):
            c = np.convolve(c, xv)
        return float(c @ (1.0 / np.arange(1, c.size + 1)))


def spectral_bound_h(order: int, dim: int) -> float:
    """Upper bound n^(m-1) sin(pi/n) for the largest H-eigenvalue (n >= 2)."""
    if dim < 2:
        raise ValueError("the sine bound is vacuous at n = 1; need n >= 2")
    return dim ** (order - 1) * math.sin(math.pi / dim)


def spectral_bound_z(order: int, dim: int) -> float:
    """Upper bound n^(m/2) sin(pi/n) for the largest Z-eigenvalue (n >= 2)."""
    if dim < 2:
        raise ValueError("the sine bound is vacuous at n = 1; need n >= 2")
    return dim ** (order / 2.0) * math.sin(math.pi / dim)
