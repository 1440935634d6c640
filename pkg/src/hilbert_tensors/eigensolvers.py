"""Extremal H- and Z-eigenvalues of Hilbert tensors, with certificates.

An H-eigenpair satisfies H_n x^{m-1} = lambda x^{[m-1]} (entrywise powers);
a Z-eigenpair satisfies H_n x^{m-1} = mu x with ||x||_2 = 1.  The largest
H-eigenvalue equals rho(F_n)^{m-1} for F_n x = (H_n x^{m-1})^{[1/(m-1)]},
and the largest Z-eigenvalue equals rho(T_n) for
T_n x = ||x||_2^{2-m} H_n x^{m-1}; both are attained at nonnegative vectors
because every tensor entry is positive.

Solvers:

* ``h_spectral_radius``: power iteration on positive vectors with per-step
  Collatz-Wielandt ratio bounds; the bracket width is the certificate.
* ``z_spectral_radius``: shifted symmetric power iteration with a shift
  large enough to make the ascent monotone; the eigen-equation residual is
  the certificate.

Both work for any generating vector wired through ``core.hankel_apply`` but
are only exercised against the Hilbert family here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import HilbertTensor, SequenceVector, as_vector


@dataclass
class EigenResult:
    """Eigenvalue estimate with its certificate and iteration history.

    For ``kind == "H"`` the certificate is the Collatz-Wielandt bracket
    [lower, upper] from the final iterate and the vector has unit m-norm.
    For ``kind == "Z"`` the certificate is the residual
    ||H_n x^{m-1} - mu x||_2 and the vector has unit 2-norm.
    """

    kind: str
    value: float
    vector: SequenceVector
    lower: float | None
    upper: float | None
    residual: float
    iterations: int
    converged: bool
    trace: list[float] = field(repr=False, default_factory=list)


def _positive_start(t: HilbertTensor, x0, p: float) -> np.ndarray:
    n = t.dim
    if x0 is None:
        x = np.ones(n)
    else:
        x = as_vector(x0).copy()
        if len(x) != n:
            raise ValueError(f"dimension mismatch: tensor dim {n}, start length {len(x)}")
    norm = float(np.sum(np.abs(x) ** p) ** (1.0 / p))
    if norm == 0.0:
        raise ValueError("start vector must be nonzero")
    return x / norm


def h_spectral_radius(
    t: HilbertTensor,
    tol: float = 1e-10,
    max_iter: int = 10_000,
    x0=None,
) -> EigenResult:
    """Largest H-eigenvalue rho(F_n)^{m-1} with a positive unit-m-norm eigenvector.

    Iterates y = H_n x^{m-1}, x <- y^{[1/(m-1)]} / ||.||_m from a positive
    start.  For a positive tensor the ratio bounds
    min_i y_i / x_i^{m-1} <= lambda_max <= max_i y_i / x_i^{m-1} hold at
    every positive iterate; the loop stops when the bracket is narrower
    than ``tol``.  The reported value H_n x^m is a convex combination of
    the ratios, so it always lies inside the bracket.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, m = t._require_finite(), t.order
    x = _positive_start(t, x0, float(m))
    if np.any(x <= 0):
        raise ValueError("H-iteration needs an entrywise positive start vector")

    trace: list[float] = []
    lower = upper = value = float("nan")
    y = x
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        y = t.apply_fast(x).values
        ratios = y / x ** (m - 1)
        lower = float(ratios.min())
        upper = float(ratios.max())
        value = float(x @ y)
        trace.append(value)
        if upper - lower <= tol:
            converged = True
            break
        root = y ** (1.0 / (m - 1))
        x = root / np.sum(root**m) ** (1.0 / m)

    residual = float(np.max(np.abs(y - value * x ** (m - 1))))
    return EigenResult(
        kind="H",
        value=value,
        vector=SequenceVector(x),
        lower=lower,
        upper=upper,
        residual=residual,
        iterations=iterations,
        converged=converged,
        trace=trace,
    )


def default_z_shift(t: HilbertTensor) -> float:
    """(m-1) times the sum of all entries; a safe convexifying shift."""
    return (t.order - 1) * t.entry_sum()


def z_spectral_radius(
    t: HilbertTensor,
    tol: float = 1e-10,
    max_iter: int = 10_000,
    x0=None,
    shift: float | None = None,
) -> EigenResult:
    """Largest Z-eigenvalue rho(T_n) with a unit-2-norm eigenvector.

    Shifted symmetric power iteration
    x <- (H_n x^{m-1} + alpha x) / ||...||_2 with alpha >= the default
    shift keeps the Rayleigh value H_n x^m nondecreasing.  Starting from
    the normalized all-ones vector the iterates stay positive, so the
    limit is the nonnegative maximizer guaranteed for positive tensors.
    The residual ||H_n x^{m-1} - mu x||_2 is the stopping certificate.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, m = t._require_finite(), t.order
    alpha = default_z_shift(t) if shift is None else float(shift)
    x = _positive_start(t, x0, 2.0)

    trace: list[float] = []
    value = residual = float("nan")
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        y = t.apply_fast(x).values
        value = float(x @ y)
        residual = float(np.linalg.norm(y - value * x))
        trace.append(value)
        if residual <= tol:
            converged = True
            break
        z = y + alpha * x
        x = z / np.linalg.norm(z)

    return EigenResult(
        kind="Z",
        value=value,
        vector=SequenceVector(x),
        lower=None,
        upper=None,
        residual=residual,
        iterations=iterations,
        converged=converged,
        trace=trace,
    )


def eigen_residual(t: HilbertTensor, pair: EigenResult) -> float:
    """Recompute the defining-equation residual for a returned pair.

    H-kind: ||H_n x^{m-1} - lambda x^{[m-1]}||_inf.
    Z-kind: ||H_n x^{m-1} - mu x||_2.
    """
    x = pair.vector.values
    y = t.apply_fast(x).values
    if pair.kind == "H":
        return float(np.max(np.abs(y - pair.value * x ** (t.order - 1))))
    if pair.kind == "Z":
        return float(np.linalg.norm(y - pair.value * x))
    raise ValueError(f"unknown eigenpair kind {pair.kind!r}")


def f_operator(t: HilbertTensor):
    """F_n x = (H_n x^{m-1})^{[1/(m-1)]} as a callable on vectors.

    For odd m the inner contraction is entrywise nonnegative for every real
    x (it is a moment integral), so the even root is always defined up to
    float rounding; tiny negative noise is clamped, genuine negatives raise.
    """
    k = t.order - 1

    def apply_f(x) -> SequenceVector:
        y = t.apply_fast(x).values
        if k % 2 == 0:
            scale = float(np.max(np.abs(y))) if y.size else 0.0
            y = np.where((y < 0) & (y > -1e-12 * (1.0 + scale)), 0.0, y)
            if np.any(y < 0):
                bad = int(np.argmin(y)) + 1
                raise ValueError(f"even root of negative component at index {bad}")
        return SequenceVector(np.copysign(np.abs(y) ** (1.0 / k), y))

    return apply_f


def t_operator(t: HilbertTensor):
    """T_n x = ||x||_2^{2-m} H_n x^{m-1} as a callable; T_n(0) = 0."""

    def apply_t(x) -> SequenceVector:
        xv = as_vector(x)
        norm = float(np.linalg.norm(xv))
        if norm == 0.0:
            return SequenceVector(np.zeros_like(xv))
        return SequenceVector(norm ** (2 - t.order) * t.apply_fast(xv).values)

    return apply_t
