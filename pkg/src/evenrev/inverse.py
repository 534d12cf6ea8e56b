"""Inverting the even part of a subdivision mask.

A mask whose even symbol never vanishes on the unit circle admits an inverse
filter ``g`` with ``ev(z) * g(z) = 1`` there; convolving with ``g`` after
downsampling undoes the even half of the upscaling step.  This module
computes such kernels three ways -- closed forms for the quadratic and cubic
spline masks, and spectral sampling of ``1/ev`` for everything else -- and
certifies the exponential decay of their coefficients where a certificate is
available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import (
    CertificateUnavailableError,
    EvenReversibilityError,
    ParameterError,
    SlowDecayError,
)
from .laurent import Mask, even_part, unit_circle
from .masks import PseudoSplineParams, bspline_mask, generalized_binomial

__all__ = [
    "SQRT2_RATIO",
    "DecayCertificate",
    "Kernel",
    "EvenReversibility",
    "check_even_reversible",
    "even_inverse_closed_quadratic",
    "even_inverse_closed_cubic",
    "cubic_series_constants",
    "even_inverse_spectral",
    "even_inverse",
    "decay_certificate",
    "pseudo_spline_gamma_norm2",
    "min_evensymbol_primal",
    "min_evensymbol_dual",
    "one_norm_bound_C",
    "verify_inverse",
    "inverse_residual_l1",
]

#: Decay ratio 3 - 2*sqrt(2) of the cubic spline even-inverse.
SQRT2_RATIO = 3.0 - 2.0 * math.sqrt(2.0)


@dataclass(frozen=True)
class DecayCertificate:
    """Constants certifying ``|g_l| <= K * lam**|l|`` for an inverse kernel.

    ``kappa`` is the modulus condition number of the even symbol, ``s`` its
    bandwidth, ``q = (sqrt(kappa)-1)/(sqrt(kappa)+1)`` and ``lam = q**(1/s)``.
    The bound is proven only when the even symbol is real and strictly
    positive on the circle (symmetric coefficients); ``hypothesis_met``
    records whether that premise holds, otherwise the numbers are nominal.
    """

    kappa: float
    s: int
    q: float
    lam: float
    K: float
    hypothesis_met: bool

    def bound(self, index: int) -> float:
        """Certified magnitude bound at coefficient ``index``."""
        if self.lam == 0.0:
            return self.K if index == 0 else 0.0
        return self.K * self.lam ** abs(index)


@dataclass(frozen=True, eq=False)
class Kernel:
    """Truncated inverse filter with a certified truncation budget.

    ``coeffs[i]`` is the coefficient at index ``offset + i``.  The omitted
    tail has absolute mass at most ``tol`` and the residual
    ``||g * ev - delta||_1`` of the generating mask stays below ``tol``
    (up to float rounding when ``tol`` is below machine precision).
    """

    offset: int
    coeffs: np.ndarray
    tol: float
    source: str
    certificate: DecayCertificate | None = None

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=float).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def support(self) -> range:
        return range(self.offset, self.offset + self.coeffs.size)

    def coeff(self, k: int) -> float:
        i = k - self.offset
        if 0 <= i < self.coeffs.size:
            return float(self.coeffs[i])
        return 0.0

    def norm1(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    def norminf(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def sum(self) -> float:
        return float(np.sum(self.coeffs))

    def as_mask(self) -> Mask:
        return Mask(self.offset, tuple(float(c) for c in self.coeffs))

    def symbol(self, z):
        return self.as_mask().symbol(z)


class EvenReversibility(NamedTuple):
    """Outcome of the nonvanishing test for an even symbol."""

    ok: bool
    min_modulus: float
    witness: complex


def check_even_reversible(
    alpha: Mask, samples: int = 16384, guard: float = 1e-9
) -> EvenReversibility:
    """Test ``|ev(z)| > guard`` on a unit-circle grid.

    Returns the minimum modulus and the grid point attaining it; raises
    :class:`EvenReversibilityError` when the even part is identically zero.
    """
    ev = even_part(alpha)
    if ev.is_zero:
        raise EvenReversibilityError("mask has identically zero even part")
    z = unit_circle(max(samples, 4 * len(ev.coeffs)))
    mods = np.abs(ev.symbol(z))
    i = int(np.argmin(mods))
    return EvenReversibility(bool(mods[i] > guard), float(mods[i]), complex(z[i]))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def even_inverse_closed_quadratic(count: int) -> Kernel:
    """One-sided inverse of the quadratic spline even part ``(3 + z)/4``.

    Coefficients ``(4/3) * (-1/3)**k`` for ``k = 0 .. count-1``; the dropped
    geometric tail has mass ``2 * 3**-count``.
    """
    if count < 1:
        raise ParameterError("count must be >= 1")
    k = np.arange(count)
    coeffs = (4.0 / 3.0) * (-1.0 / 3.0) ** k
    tail = 2.0 * 3.0 ** (-count)
    return Kernel(0, coeffs, tail, "closed_quadratic")


def even_inverse_closed_cubic(halfwidth: int) -> Kernel:
    """Symmetric inverse of the cubic spline even part ``(1/z + 6 + z)/8``.

    Coefficients ``sqrt(2) * (-(3 - 2*sqrt(2)))**|k|`` for ``|k| <= halfwidth``.
    """
    if halfwidth < 0:
        raise ParameterError("halfwidth must be >= 0")
    k = np.arange(-halfwidth, halfwidth + 1)
    coeffs = math.sqrt(2.0) * (-SQRT2_RATIO) ** np.abs(k)
    tail = 2.0 * math.sqrt(2.0) * SQRT2_RATIO ** (halfwidth + 1) / (1.0 - SQRT2_RATIO)
    return Kernel(-halfwidth, coeffs, tail, "closed_cubic")


def cubic_series_constants(kmax: int, nterms: int | None = None):
    """Series sums behind the cubic closed form, by direct summation.

    Returns arrays ``a`` and ``b`` of length ``kmax + 1`` with

    * ``a[k] = sum_n C(2(n+k), n) * 6**(-2(n+k))``
    * ``b[k] = sum_n C(2(n+k)+1, n) * 6**(-2(n+k)-1)``

    The summand ratio stays below 4/9, so the default term count leaves a
    tail under 1e-14; these sums are the independent oracle for the
    geometric closed form of the cubic inverse.
    """
    if kmax < 0:
        raise ParameterError("kmax must be >= 0")
    if nterms is None:
        nterms = 96
    a = np.zeros(kmax + 1)
    b = np.zeros(kmax + 1)
    for k in range(kmax + 1):
        sa = 0.0
        sb = 0.0
        for n in range(nterms):
            sa += math.comb(2 * (n + k), n) * 6.0 ** (-2 * (n + k))
            sb += math.comb(2 * (n + k) + 1, n) * 6.0 ** (-2 * (n + k) - 1)
        a[k] = sa
        b[k] = sb
    return a, b


# ---------------------------------------------------------------------------
# spectral inversion
# ---------------------------------------------------------------------------


def _periodized_inverse(ev: Mask, size: int) -> np.ndarray:
    """Inverse DFT of ``1/ev`` on ``size`` roots of unity, centred on index 0."""
    vals = ev.symbol(unit_circle(size))
    g = np.fft.ifft(1.0 / vals).real
    return np.fft.fftshift(g)  # ascending signed indices -size/2 .. size/2 - 1


def even_inverse_spectral(
    alpha: Mask,
    tol: float = 1e-12,
    guard: float = 1e-9,
    max_size: int = 1 << 20,
    certify: bool = True,
    samples: int = 16384,
) -> Kernel:
    """Invert the even part of ``alpha`` by sampling ``1/ev`` at roots of unity.

    The grid is doubled until successive periodizations agree to ``tol/4``
    and the edge coefficients fall below ``tol/4``; the result is trimmed so
    the dropped mass stays below ``tol/4`` and the residual
    ``||g * ev - delta||_1`` is verified to be below ``tol``.

    Raises :class:`EvenReversibilityError` when the even symbol (nearly)
    vanishes and :class:`SlowDecayError` when the budget ``max_size`` is
    exhausted before stabilisation.
    """
    if tol <= 0:
        raise ParameterError("tol must be positive")
    rev = check_even_reversible(alpha, samples=samples, guard=guard)
    if not rev.ok:
        raise EvenReversibilityError(
            f"even symbol modulus {rev.min_modulus:.3e} at z={rev.witness:.6f} "
            f"is below the guard {guard:.1e}"
        )
    ev = even_part(alpha)
    size = 64
    while 4 * len(ev.coeffs) > size:
        size *= 2
    prev = _periodized_inverse(ev, size)
    while size < max_size:
        size *= 2
        curr = _periodized_inverse(ev, size)
        half = prev.size // 2
        lo = size // 2 - half  # position of prev's index -half inside curr
        drift = float(np.max(np.abs(curr[lo : lo + prev.size] - prev)))
        edge = float(
            max(np.max(np.abs(curr[: size // 4])), np.max(np.abs(curr[3 * size // 4 :])))
        )
        if drift < tol / 4.0 and edge < tol / 4.0:
            kernel = _trim_kernel(curr, -(size // 2), tol)
            kernel = _finalize_kernel(kernel, alpha, ev, tol, certify, samples)
            if kernel is not None:
                return kernel
        prev = curr
    raise SlowDecayError(
        f"inverse coefficients did not stabilise below {tol:.1e} within {max_size} samples"
    )


def _trim_kernel(values: np.ndarray, offset: int, tol: float) -> Kernel:
    """Drop edge coefficients while the discarded mass stays within budget."""
    lo, hi = 0, values.size
    budget = tol / 8.0
    dropped = 0.0
    while lo < hi - 1 and dropped + abs(values[lo]) <= budget:
        dropped += abs(values[lo])
        lo += 1
    dropped = 0.0
    while hi - 1 > lo and dropped + abs(values[hi - 1]) <= budget:
        dropped += abs(values[hi - 1])
        hi -= 1
    return Kernel(offset + lo, values[lo:hi], tol, "spectral")


def _finalize_kernel(
    kernel: Kernel, alpha: Mask, ev: Mask, tol: float, certify: bool, samples: int
) -> Kernel | None:
    residual = inverse_residual_l1(alpha, kernel)
    if residual > tol:
        return None
    cert = None
    if certify:
        cert = decay_certificate(alpha, samples=samples)
        if not cert.hypothesis_met:
            cert = None
    return Kernel(kernel.offset, kernel.coeffs, tol, kernel.source, cert)


def even_inverse(
    alpha: Mask,
    tol: float = 1e-12,
    method: str = "auto",
    guard: float = 1e-9,
    samples: int = 16384,
) -> Kernel:
    """Dispatch between the closed forms and the spectral inverter.

    ``method="closed"`` serves only the quadratic and cubic spline masks;
    ``"auto"`` picks the closed form when the mask matches one of them and
    the spectral route otherwise.
    """
    if method not in ("auto", "closed", "spectral"):
        raise ParameterError(f"unknown method {method!r}")
    if method == "spectral":
        return even_inverse_spectral(alpha, tol=tol, guard=guard, samples=samples)
    f = alpha.astype_float()
    if f == bspline_mask(3).astype_float():
        count = max(1, math.ceil(math.log(2.0 / tol) / math.log(3.0)))
        return even_inverse_closed_quadratic(count)
    if f == bspline_mask(4).astype_float():
        need = math.log(tol * (1.0 - SQRT2_RATIO) / (2.0 * math.sqrt(2.0)))
        halfwidth = max(0, math.ceil(need / math.log(SQRT2_RATIO)) - 1)
        while 2 * math.sqrt(2) * SQRT2_RATIO ** (halfwidth + 1) / (1 - SQRT2_RATIO) > tol:
            halfwidth += 1
        return even_inverse_closed_cubic(halfwidth)
    if method == "closed":
        raise ParameterError("closed-form inverses exist only for the quadratic and cubic spline masks")
    return even_inverse_spectral(alpha, tol=tol, guard=guard, samples=samples)


# ---------------------------------------------------------------------------
# certificates and closed-form norms
# ---------------------------------------------------------------------------


def decay_certificate(
    alpha: Mask,
    samples: int = 16384,
    guard: float = 1e-9,
    require_positive: bool = False,
) -> DecayCertificate:
    """Exponential-decay constants for the inverse of the even part.

    ``kappa = max|ev| / min|ev|`` and ``K = max(1, (1+sqrt(kappa))^2/(2*kappa))
    / min|ev|`` with ``lam = q**(1/s)``; for ``kappa = 1`` the inverse is a
    pure impulse and the exact values ``lam = 0`` and ``K = 1/min|ev|`` are
    returned.  The bound is guaranteed only when the even symbol is real and
    strictly positive on the circle; for asymmetric even parts the returned
    constants are nominal (``hypothesis_met=False``), and with
    ``require_positive=True`` such masks raise
    :class:`CertificateUnavailableError` instead.
    """
    ev = even_part(alpha)
    if ev.is_zero:
        raise EvenReversibilityError("mask has identically zero even part")
    vals = ev.symbol(unit_circle(max(samples, 4 * len(ev.coeffs))))
    mods = np.abs(vals)
    mn = float(np.min(mods))
    mx = float(np.max(mods))
    if mn <= guard:
        raise CertificateUnavailableError(
            f"even symbol modulus reaches {mn:.3e}; no summable inverse"
        )
    positive = bool(
        np.max(np.abs(vals.imag)) <= 1e-12 * max(1.0, mx) and np.min(vals.real) > guard
    )
    if require_positive and not positive:
        raise CertificateUnavailableError(
            "even symbol is not real and strictly positive on the circle"
        )
    kappa = mx / mn
    if kappa <= 1.0 + 1e-12:
        return DecayCertificate(1.0, ev.bandwidth, 0.0, 0.0, 1.0 / mn, positive)
    s = ev.bandwidth
    q = (math.sqrt(kappa) - 1.0) / (math.sqrt(kappa) + 1.0)
    lam = q ** (1.0 / s)
    K = max(1.0, (1.0 + math.sqrt(kappa)) ** 2 / (2.0 * kappa)) / mn
    return DecayCertificate(kappa, s, q, lam, K, positive)


def pseudo_spline_gamma_norm2(n: int, nu: int) -> float:
    """Spectral norm of the pseudo-spline even-inverse, in closed form.

    Equals ``2**(floor((n-1)/2) + nu)`` over ``sum_{j<=nu} C(n/2 + nu, j)``
    (generalized binomials for odd ``n``), which is also the reciprocal of
    the minimum even-symbol modulus.
    """
    PseudoSplineParams(n, nu)
    den = sum(generalized_binomial(Fraction(n, 2) + nu, j) for j in range(nu + 1))
    return float(Fraction(2 ** ((n - 1) // 2 + nu)) / den)


def min_evensymbol_primal(k: int, nu: int) -> float:
    """Minimum even-symbol modulus of the order-2k primal mask, closed form."""
    if k < 1 or not 0 <= nu <= k - 1:
        raise ParameterError(f"need k >= 1 and 0 <= nu <= k-1, got ({k}, {nu})")
    total = sum(math.comb(k + nu, j) for j in range(nu + 1))
    return float(Fraction(total, 2 ** (k + nu - 1)))


def min_evensymbol_dual(k: int, nu: int) -> float:
    """Minimum even-symbol modulus of the order-(2k+1) dual mask, closed form."""
    if k < 1 or not 0 <= nu <= k - 1:
        raise ParameterError(f"need k >= 1 and 0 <= nu <= k-1, got ({k}, {nu})")
    total = sum(generalized_binomial(Fraction(2 * k + 1, 2) + nu, j) for j in range(nu + 1))
    return float(total / Fraction(2 ** (k + nu)))


def one_norm_bound_C(k: int, nu: int) -> float:
    """Upper bound on the one-norm of the order-2k primal even-inverse.

    ``C = kappa * max(1, (1+sqrt(kappa))^2/(2*kappa)) * (1+lam)/(1-lam)``
    with ``kappa = 2**(k+nu-1) / sum_{j<=nu} C(k+nu, j)`` and
    ``s = floor((k+nu)/2)``.  The interpolatory case ``nu = k-1`` has
    ``kappa = 1`` and the exact value 1 is returned.
    """
    if k < 2 or not 0 <= nu <= k - 1:
        raise ParameterError(f"need k >= 2 and 0 <= nu <= k-1, got ({k}, {nu})")
    kappa_exact = Fraction(2 ** (k + nu - 1), sum(math.comb(k + nu, j) for j in range(nu + 1)))
    if kappa_exact == 1:
        return 1.0
    kappa = float(kappa_exact)
    s = (k + nu) // 2
    q = (math.sqrt(kappa) - 1.0) / (math.sqrt(kappa) + 1.0)
    lam = q ** (1.0 / s)
    return kappa * max(1.0, (1.0 + math.sqrt(kappa)) ** 2 / (2.0 * kappa)) * (1.0 + lam) / (1.0 - lam)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def verify_inverse(alpha: Mask, kernel: Kernel, samples: int = 16384) -> float:
    """Max over the sampled circle of ``|ev(z) * g(z) - 1|``."""
    ev = even_part(alpha)
    z = unit_circle(max(samples, 4 * max(len(ev.coeffs), kernel.coeffs.size)))
    return float(np.max(np.abs(ev.symbol(z) * kernel.symbol(z) - 1.0)))


def inverse_residual_l1(alpha: Mask, kernel: Kernel) -> float:
    """One-norm ``||g * ev - delta||_1`` of the finite convolution."""
    ev = even_part(alpha)
    if ev.is_zero:
        raise EvenReversibilityError("mask has identically zero even part")
    evf = np.array([float(c) for c in ev.coeffs])
    conv = np.convolve(np.asarray(kernel.coeffs), evf)
    pos = -(kernel.offset + ev.offset)  # index of the z**0 coefficient
    if 0 <= pos < conv.size:
        conv[pos] -= 1.0
        return float(np.sum(np.abs(conv)))
    return float(np.sum(np.abs(conv)) + 1.0)
