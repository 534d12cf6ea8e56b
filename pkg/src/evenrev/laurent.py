"""Mask (Laurent coefficient sequence) algebra and periodic-signal operators.

Two carriers appear throughout the package:

* :class:`Mask` -- a finitely supported coefficient sequence ``m`` with an
  integer offset.  Its symbol is the Laurent polynomial
  ``m(z) = sum_k m_k z**k`` evaluated on the complex unit circle.  Catalog
  masks keep exact :class:`fractions.Fraction` coefficients so closed-form
  identities can be checked without rounding; everything else is float.

* periodic signals -- one period of a bi-infinite periodic sequence, stored
  as a plain 1-D ``float64`` numpy array.  All indexing is modulo the period,
  which makes every convolution operator in this module circulant and every
  symbol identity exact at the roots of unity.

Conventions (used consistently everywhere):

* convolution   ``(m * c)_k = sum_l m_l c_{k-l}``
* upscaling     ``(S_m c)_k = sum_l m_{k-2l} c_l``, equivalently
  ``m * (c upsampled by 2)``
* even part     ``(ev m)_k = m_{2k}``, odd part ``(od m)_k = m_{2k+1}``, so
  ``m(z) = ev(z^2) + z * od(z^2)``
* difference    ``(diff c)_k = c_{k+1} - c_k``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import LengthError, ParameterError

__all__ = [
    "Mask",
    "make_mask",
    "delta",
    "convolve",
    "even_part",
    "odd_part",
    "upsample_mask",
    "as_signal",
    "upsample",
    "downsample",
    "circular_convolve",
    "subdivide",
    "difference",
    "unit_circle",
    "sup_norm_on_circle",
    "min_modulus_on_circle",
    "norm_l1",
    "norm_linf",
    "abs_moment",
]


def _is_exact(x) -> bool:
    return isinstance(x, Rational)


@dataclass(frozen=True)
class Mask:
    """Finitely supported Laurent coefficient sequence.

    ``coeffs[i]`` is the coefficient of ``z**(offset + i)``.  Construction
    canonically trims leading/trailing zeros; the all-zero mask is the unique
    instance with empty ``coeffs``.
    """

    offset: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", int(self.offset) + lo)
            object.__setattr__(self, "coeffs", coeffs[lo:hi])

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self) -> range:
        """Indices from the first to the last nonzero coefficient."""
        return range(self.offset, self.offset + len(self.coeffs))

    @property
    def is_rational(self) -> bool:
        return all(_is_exact(c) for c in self.coeffs)

    @property
    def bandwidth(self) -> int:
        """Smallest s with ``m_k = 0`` for ``|k| > s`` (0 for the zero mask)."""
        if self.is_zero:
            return 0
        return max(abs(self.offset), abs(self.offset + len(self.coeffs) - 1))

    def coeff(self, k: int):
        """Coefficient of ``z**k`` (zero outside the support)."""
        i = k - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def sum(self):
        """Coefficient sum, i.e. the symbol value at z = 1."""
        return sum(self.coeffs, start=Fraction(0)) if self.is_rational else sum(self.coeffs)

    def astype_float(self) -> "Mask":
        return Mask(self.offset, tuple(float(c) for c in self.coeffs))

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "Mask") -> "Mask":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [self.coeff(k) + other.coeff(k) for k in range(lo, hi)]
        return Mask(lo, tuple(out))

    def __neg__(self) -> "Mask":
        return Mask(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Mask") -> "Mask":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Mask):
            return convolve(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor) -> "Mask":
        if factor == 0:
            return Mask(0, ())
        return Mask(self.offset, tuple(c * factor for c in self.coeffs))

    def shift(self, amount: int) -> "Mask":
        """Multiply the symbol by ``z**amount``."""
        if self.is_zero:
            return self
        return Mask(self.offset + amount, self.coeffs)

    # -- symbol evaluation ---------------------------------------------------

    def __call__(self, z):
        return self.symbol(z)

    def symbol(self, z):
        """Evaluate ``sum_k m_k z**k`` at a complex point or array of points."""
        z = np.asarray(z, dtype=complex)
        if self.is_zero:
            out = np.zeros_like(z)
            return out if out.ndim else complex(out)
        floats = [float(c) for c in self.coeffs]
        out = np.polyval(list(reversed(floats)), z)
        if self.offset:
            out = out * z ** self.offset
        return out if out.ndim else complex(out)


def make_mask(offset: int, coeffs) -> Mask:
    """Build a canonical mask from an offset and a coefficient sequence.

    Coefficients may be ints, :class:`~fractions.Fraction` or floats; exact
    inputs stay exact.  Leading/trailing zeros are trimmed (adjusting the
    offset); an all-zero input yields the zero mask.
    """
    coeffs = tuple(coeffs)
    if not coeffs:
        raise ParameterError("mask needs at least one coefficient")
    return Mask(int(offset), coeffs)


def delta(value=1) -> Mask:
    """Unit-impulse mask (symbol identically ``value``)."""
    return Mask(0, (value,))


def convolve(a: Mask, b: Mask) -> Mask:
    """Coefficient convolution; symbols multiply pointwise.

    Exact when both operands are exact; float masks take a numpy fast path.
    """
    if a.is_zero or b.is_zero:
        return Mask(0, ())
    if not (a.is_rational and b.is_rational):
        floats_a = np.array([float(c) for c in a.coeffs])
        floats_b = np.array([float(c) for c in b.coeffs])
        return Mask(a.offset + b.offset, tuple(np.convolve(floats_a, floats_b).tolist()))
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    b_nonzero = [(j, cb) for j, cb in enumerate(b.coeffs) if cb != 0]
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in b_nonzero:
            out[i + j] += ca * cb
    return Mask(a.offset + b.offset, tuple(out))


def even_part(m: Mask) -> Mask:
    """Subsequence of even-index coefficients: ``(ev m)_k = m_{2k}``."""
    if m.is_zero:
        return m
    lo = -(-m.offset // 2)  # ceil(offset / 2)
    hi = (m.offset + len(m.coeffs) - 1) // 2
    if hi < lo:
        return Mask(0, ())
    return Mask(lo, tuple(m.coeff(2 * k) for k in range(lo, hi + 1)))


def odd_part(m: Mask) -> Mask:
    """Subsequence of odd-index coefficients: ``(od m)_k = m_{2k+1}``."""
    if m.is_zero:
        return m
    lo = -(-(m.offset - 1) // 2)
    hi = (m.offset + len(m.coeffs) - 2) // 2
    if hi < lo:
        return Mask(0, ())
    return Mask(lo, tuple(m.coeff(2 * k + 1) for k in range(lo, hi + 1)))


def upsample_mask(m: Mask, factor: int = 2) -> Mask:
    """Substitute ``z -> z**factor`` in the symbol."""
    if factor < 1:
        raise ParameterError("upsampling factor must be >= 1")
    if m.is_zero or factor == 1:
        return m
    out = [0] * (factor * (len(m.coeffs) - 1) + 1)
    for i, c in enumerate(m.coeffs):
        out[factor * i] = c
    return Mask(factor * m.offset, tuple(out))


# ---------------------------------------------------------------------------
# periodic signals
# ---------------------------------------------------------------------------


def as_signal(values) -> np.ndarray:
    """Validate and copy one period of a periodic signal as float64."""
    c = np.asarray(values, dtype=float)
    if c.ndim != 1 or c.size < 1:
        raise LengthError("a periodic signal is a nonempty 1-D array")
    return c.copy()


def upsample(c) -> np.ndarray:
    """Interleave zeros: ``[a, b] -> [a, 0, b, 0]`` (period doubles)."""
    c = as_signal(c)
    out = np.zeros(2 * c.size)
    out[::2] = c
    return out


def downsample(c) -> np.ndarray:
    """Keep even-index entries: ``[a, b, c, d] -> [a, c]`` (period halves)."""
    c = as_signal(c)
    if c.size % 2:
        raise LengthError(f"downsampling needs an even period, got {c.size}")
    return c[::2].copy()


def circular_convolve(m: Mask, c) -> np.ndarray:
    """Periodic convolution ``(m * c)_k = sum_l m_l c_{k-l mod N}``."""
    c = as_signal(c)
    out = np.zeros(c.size)
    for i, w in enumerate(m.coeffs):
        w = float(w)
        if w:
            out += w * np.roll(c, m.offset + i)
    return out


def subdivide(m: Mask, c) -> np.ndarray:
    """Upscaling step ``(S_m c)_k = sum_l m_{k-2l} c_l`` (period doubles).

    Implemented by scattering each mask coefficient onto its stride-2 grid,
    which is an independent code path from ``circular_convolve(m, upsample(c))``.
    """
    c = as_signal(c)
    n = c.size
    out = np.zeros(2 * n)
    base = 2 * np.arange(n)
    for i, w in enumerate(m.coeffs):
        w = float(w)
        if w:
            out[(base + m.offset + i) % (2 * n)] += w * c
    return out


def difference(c) -> np.ndarray:
    """Periodic forward difference ``(diff c)_k = c_{k+1} - c_k``."""
    c = as_signal(c)
    return np.roll(c, -1) - c


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------


def unit_circle(samples: int) -> np.ndarray:
    """``samples`` evenly spaced points ``exp(-2*pi*i*m/samples)`` on the circle."""
    return np.exp(-2j * np.pi * np.arange(samples) / samples)


def _validated_samples(m: Mask, samples: int) -> int:
    if samples < 4 or samples & (samples - 1):
        raise ParameterError("samples must be a power of two >= 4")
    if samples < 4 * max(len(m.coeffs), 1):
        raise ParameterError(
            f"samples={samples} undersamples a mask with {len(m.coeffs)} coefficients"
        )
    return samples


def sup_norm_on_circle(m: Mask, samples: int = 16384) -> float:
    """Max of ``|m(z)|`` over a power-of-two grid of unit-circle points."""
    _validated_samples(m, samples)
    if m.is_zero:
        return 0.0
    return float(np.max(np.abs(m.symbol(unit_circle(samples)))))


def min_modulus_on_circle(m: Mask, samples: int = 16384) -> float:
    """Min of ``|m(z)|`` over a power-of-two grid of unit-circle points."""
    _validated_samples(m, samples)
    if m.is_zero:
        return 0.0
    return float(np.min(np.abs(m.symbol(unit_circle(samples)))))


def norm_l1(m: Mask) -> float:
    """Sum of absolute coefficient values."""
    return float(sum(abs(float(c)) for c in m.coeffs))


def norm_linf(m: Mask) -> float:
    """Largest absolute coefficient value."""
    if m.is_zero:
        return 0.0
    return float(max(abs(float(c)) for c in m.coeffs))


def abs_moment(m: Mask) -> float:
    """First absolute moment ``sum_k |m_k| |k|`` of the coefficients."""
    return float(
        sum(abs(float(c)) * abs(m.offset + i) for i, c in enumerate(m.coeffs))
    )
