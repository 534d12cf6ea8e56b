"""Multilevel pyramid transform on periodic signals.

One analysis step decimates the data with the even-inverse of the mask and
stores the prediction residual against the upscaled coarse data::

    coarse = g * (c downsampled by 2)        detail = c - S_alpha(coarse)

With the true even-inverse the detail vanishes at every even index, so the
details carry only half the information; reconstruction
``c = S_alpha(coarse) + detail`` is exact for *any* decimation filter, right
or wrong, which the tests exploit.

Two decimation modes are provided:

* ``"exact"`` -- divide by the even symbol at the roots of unity (discrete
  Fourier division).  On the periodic model this is the exact inverse, so
  even-detail annihilation holds to machine precision.
* ``"kernel"`` -- circular convolution with a truncated inverse
  :class:`~evenrev.inverse.Kernel`, matching the bi-infinite formulation and
  exercising the truncation budget.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DecimationSingularError,
    LengthError,
    LevelError,
    ParameterError,
    ShapeError,
)
from .inverse import Kernel, even_inverse_spectral
from .laurent import (
    Mask,
    as_signal,
    circular_convolve,
    delta,
    downsample,
    even_part,
    subdivide,
)

__all__ = ["Pyramid", "decimate", "decompose_level", "decompose", "reconstruct", "threshold_details"]

MODES = ("exact", "kernel")


@dataclass(frozen=True)
class Pyramid:
    """Coarse approximation plus detail signals for each finer level.

    ``details[l-1]`` holds level ``l`` (length ``len(coarse) * 2**l``); the
    finest level comes last.
    """

    coarse: np.ndarray
    details: tuple
    mask_id: str = "custom"

    def __post_init__(self):
        coarse = as_signal(self.coarse)
        coarse.setflags(write=False)
        fixed = []
        size = coarse.size
        for i, d in enumerate(self.details):
            d = as_signal(d)
            size *= 2
            if d.size != size:
                raise ShapeError(
                    f"detail level {i + 1} has length {d.size}, expected {size}"
                )
            d.setflags(write=False)
            fixed.append(d)
        object.__setattr__(self, "coarse", coarse)
        object.__setattr__(self, "details", tuple(fixed))

    @property
    def levels(self) -> int:
        return len(self.details)

    @property
    def fine_length(self) -> int:
        return self.coarse.size * 2 ** self.levels

    def max_even_detail(self) -> float:
        """Largest detail magnitude at an even index, over all levels."""
        if not self.details:
            return 0.0
        return max(float(np.max(np.abs(d[::2]))) for d in self.details)


def _normalize_mode(mode: str) -> str:
    if mode in ("exact", "exact_periodic"):
        return "exact"
    if mode == "kernel":
        return "kernel"
    raise ParameterError(f"unknown decimation mode {mode!r}; use one of {MODES}")


def _exact_decimate(ce: np.ndarray, ev: Mask, guard: float) -> np.ndarray:
    m = ce.size
    z = np.exp(-2j * np.pi * np.arange(m // 2 + 1) / m)
    vals = ev.symbol(z)
    bad = np.abs(vals) <= guard
    if np.any(bad):
        where = complex(z[int(np.argmax(bad))])
        raise DecimationSingularError(
            f"even symbol vanishes at the root of unity {where:.6f} (period {m})"
        )
    return np.fft.irfft(np.fft.rfft(ce) / vals, m)


def decimate(
    c,
    alpha: Mask,
    mode: str = "exact",
    kernel: Kernel | None = None,
    guard: float = 1e-9,
) -> np.ndarray:
    """Halve the period: convolve the downsampled data with the even-inverse.

    In ``"exact"`` mode the periodized inverse is applied by discrete Fourier
    division (interpolatory masks reduce to plain downsampling); in
    ``"kernel"`` mode a truncated kernel is convolved instead (computed
    spectrally from ``alpha`` when not supplied).
    """
    c = as_signal(c)
    if c.size % 2:
        raise LengthError(f"decimation needs an even period, got {c.size}")
    mode = _normalize_mode(mode)
    ce = downsample(c)
    if mode == "kernel":
        if kernel is None:
            kernel = even_inverse_spectral(alpha)
        return circular_convolve(kernel.as_mask(), ce)
    ev = even_part(alpha)
    if ev == delta(1) or ev == delta(1.0):
        return ce
    return _exact_decimate(ce, ev, guard)


def decompose_level(
    c,
    alpha: Mask,
    mode: str = "exact",
    kernel: Kernel | None = None,
):
    """One analysis step: returns ``(coarse, detail)`` with ``detail`` full length."""
    c = as_signal(c)
    coarse = decimate(c, alpha, mode=mode, kernel=kernel)
    detail = c - subdivide(alpha, coarse)
    return coarse, detail


def decompose(
    c,
    alpha: Mask,
    levels: int,
    mode: str = "exact",
    kernel: Kernel | None = None,
    mask_id: str = "custom",
) -> Pyramid:
    """Run ``levels`` analysis steps, finest data in, coarse-plus-details out."""
    c = as_signal(c)
    if levels < 1:
        raise LevelError(f"need at least one level, got {levels}")
    if c.size % (1 << levels) or c.size // (1 << levels) < 2:
        raise LevelError(
            f"period {c.size} does not support {levels} halvings with >= 2 coarse samples"
        )
    mode = _normalize_mode(mode)
    if mode == "kernel" and kernel is None:
        kernel = even_inverse_spectral(alpha)
    details = []
    for _ in range(levels):
        c, d = decompose_level(c, alpha, mode=mode, kernel=kernel)
        details.append(d)
    details.reverse()  # store coarsest-level detail first
    return Pyramid(c, tuple(details), mask_id)


def reconstruct(p: Pyramid, alpha: Mask) -> np.ndarray:
    """Exact synthesis ``c = S_alpha(coarse) + detail``, level by level.

    Inverts :func:`decompose` for any decimation mode or kernel, because the
    analysis stored exactly the residual that this sum restores.
    """
    c = np.asarray(p.coarse, dtype=float)
    for d in p.details:
        c = subdivide(alpha, c) + d
    return c


def threshold_details(p: Pyramid, eps: float):
    """Zero all detail entries with ``|d| < eps``; coarse data is untouched.

    Returns ``(pyramid, kept, total)`` where ``kept`` counts the detail
    entries still nonzero afterwards.
    """
    if eps < 0:
        raise ParameterError("threshold must be nonnegative")
    kept = 0
    total = 0
    new_details = []
    for d in p.details:
        out = np.where(np.abs(d) < eps, 0.0, d)
        kept += int(np.count_nonzero(out))
        total += out.size
        new_details.append(out)
    return Pyramid(p.coarse, tuple(new_details), p.mask_id), kept, total
