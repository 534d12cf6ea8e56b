"""Quantitative studies of the pyramid transform: detail decay, stability
under perturbation of inputs or pyramid data, and threshold compression.

Every experiment is deterministic given its seed, and reports both measured
norms and the corresponding proven bounds so the inequalities can be checked
row by row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ParameterError
from .inverse import Kernel, even_inverse_spectral
from .laurent import (
    Mask,
    abs_moment,
    as_signal,
    difference,
    even_part,
    convolve,
    min_modulus_on_circle,
    norm_l1,
    odd_part,
    unit_circle,
    upsample_mask,
)
from .transform import Pyramid, decompose_level, decompose, reconstruct, threshold_details

__all__ = [
    "sample_function",
    "derivative_bound",
    "MomentConstants",
    "filter_moment_constants",
    "DecayRow",
    "DecayReport",
    "decay_report",
    "estimate_subdivision_sup_norm",
    "subdivision_norm_inf",
    "subdivision_norm_2",
    "StabilityTrial",
    "StabilityReport",
    "reconstruction_stability_experiment",
    "decomposition_stability_experiment",
    "CompressionRow",
    "CompressionReport",
    "compression_experiment",
]


# ---------------------------------------------------------------------------
# test functions
# ---------------------------------------------------------------------------


def _poly_terms(params: dict | None):
    params = params or {}
    cos_c = tuple(float(x) for x in params.get("cos", (1.0,)))
    sin_c = tuple(float(x) for x in params.get("sin", ()))
    return cos_c, sin_c


def _build(kind: str, params: dict | None) -> tuple[Callable[[np.ndarray], np.ndarray], float]:
    if kind == "sine":
        freq = float((params or {}).get("frequency", 1.0))
        return (lambda t: np.sin(2.0 * np.pi * freq * t)), 2.0 * np.pi * freq
    if kind == "gaussian_bump":
        sharp = float((params or {}).get("sharpness", 8.0))
        # f' = -sharp*pi*sin(2*pi*t)*f, so |f'| <= sharp*pi
        return (lambda t: np.exp(-sharp * np.sin(np.pi * t) ** 2)), sharp * np.pi
    if kind == "poly":
        cos_c, sin_c = _poly_terms(params)

        def f(t):
            out = np.zeros_like(t)
            for m, c in enumerate(cos_c, start=1):
                out += c * np.cos(2.0 * np.pi * m * t)
            for m, s in enumerate(sin_c, start=1):
                out += s * np.sin(2.0 * np.pi * m * t)
            return out

        bound = sum(
            2.0 * np.pi * m * abs(c) for m, c in enumerate(cos_c, start=1)
        ) + sum(2.0 * np.pi * m * abs(s) for m, s in enumerate(sin_c, start=1))
        return f, float(bound)
    raise ParameterError(f"unknown (or non-periodic) test function {kind!r}")


def sample_function(kind: str, j: int, base: int = 2, params: dict | None = None) -> np.ndarray:
    """Sample a smooth 1-periodic test function on the dyadic grid ``k / 2**j``.

    Returns ``base * 2**j`` samples, i.e. ``base`` periods; the mean-value
    theorem then guarantees that neighbouring samples differ by at most
    ``derivative_bound(kind) * 2**-j``.
    """
    if base < 2:
        raise ParameterError("base must be >= 2")
    if j < 0:
        raise ParameterError("resolution exponent must be >= 0")
    f, _ = _build(kind, params)
    t = np.arange(base * 2 ** j) / 2.0 ** j
    return f(t)


def derivative_bound(kind: str, params: dict | None = None) -> float:
    """Upper bound on ``max |f'|`` for the named test function."""
    return _build(kind, params)[1]


# ---------------------------------------------------------------------------
# decay of differences and details
# ---------------------------------------------------------------------------


class MomentConstants(tuple):
    """Triple ``(k_alpha, k_gamma, k_combined)`` of moment constants."""

    __slots__ = ()

    def __new__(cls, k_alpha, k_gamma, k_combined):
        return super().__new__(cls, (float(k_alpha), float(k_gamma), float(k_combined)))

    @property
    def k_alpha(self):
        return self[0]

    @property
    def k_gamma(self):
        return self[1]

    @property
    def k_combined(self):
        return self[2]


def filter_moment_constants(alpha: Mask, kernel: Kernel) -> MomentConstants:
    """First absolute moments controlling the detail decay.

    ``k_alpha = sum |alpha_k| |k|``, ``k_gamma = 2 sum |g_k| |k|`` and the
    combined constant ``k_gamma * ||alpha||_1 + k_alpha * ||g||_1`` that
    bounds details by same-level differences.
    """
    k_alpha = abs_moment(alpha)
    k_gamma = 2.0 * abs_moment(kernel.as_mask())
    combined = k_gamma * norm_l1(alpha) + k_alpha * kernel.norm1()
    return MomentConstants(k_alpha, k_gamma, combined)


@dataclass(frozen=True)
class DecayRow:
    """Measured and bounded norms at one pyramid level."""

    level: int
    delta_norm: float
    detail_norm: float | None
    bound_delta: float
    bound_detail: float | None


@dataclass(frozen=True)
class DecayReport:
    """Per-level decay measurements plus the constants the bounds use."""

    kind: str
    levels: int
    base: int
    mask_id: str
    mode: str
    rows: tuple
    constants: dict

    def row(self, level: int) -> DecayRow:
        return self.rows[level]


def decay_report(
    kind: str,
    levels: int,
    base: int,
    alpha: Mask,
    mode: str = "exact",
    kernel: Kernel | None = None,
    params: dict | None = None,
    mask_id: str = "custom",
) -> DecayReport:
    """Decompose a sampled test function and tabulate norms against bounds.

    Row ``l`` holds the sup norms of the level-``l`` difference and detail,
    the a-priori difference bound ``K * ||g||_1**(j-l) * 2**-l`` and the
    detail bound obtained by multiplying it with the combined moment
    constant.  Level 0 has no detail.
    """
    if kernel is None:
        kernel = even_inverse_spectral(alpha)
    signal = sample_function(kind, levels, base, params)
    fprime = derivative_bound(kind, params)
    moments = filter_moment_constants(alpha, kernel)
    g1 = kernel.norm1()

    approx = signal
    delta_norms = {levels: float(np.max(np.abs(difference(approx))))}
    detail_norms: dict[int, float] = {}
    for level in range(levels, 0, -1):
        approx, det = decompose_level(
            approx, alpha, mode=mode, kernel=kernel if mode == "kernel" else None
        )
        delta_norms[level - 1] = float(np.max(np.abs(difference(approx))))
        detail_norms[level] = float(np.max(np.abs(det)))

    rows = []
    for level in range(levels + 1):
        bound_delta = fprime * g1 ** (levels - level) * 2.0 ** (-level)
        if level == 0:
            rows.append(DecayRow(0, delta_norms[0], None, bound_delta, None))
        else:
            rows.append(
                DecayRow(
                    level,
                    delta_norms[level],
                    detail_norms[level],
                    bound_delta,
                    moments.k_combined * bound_delta,
                )
            )
    constants = {
        "fprime_bound": fprime,
        "k_alpha": moments.k_alpha,
        "k_gamma": moments.k_gamma,
        "k_combined": moments.k_combined,
        "gamma_norm1": g1,
    }
    return DecayReport(kind, levels, base, mask_id, mode, tuple(rows), constants)


# ---------------------------------------------------------------------------
# operator norms of one transform step
# ---------------------------------------------------------------------------


def estimate_subdivision_sup_norm(alpha: Mask, max_power: int = 12) -> float:
    """Empirical bound on ``sup_j ||S_alpha^j||_inf`` from iterated masks.

    The j-fold upscaling operator has mask ``alpha(z) alpha(z^2) ...
    alpha(z^(2^(j-1)))``; its sup operator norm is the largest absolute
    row sum, i.e. the max over residues mod ``2**j`` of the coefficient
    magnitudes in that class.  Powers up to ``max_power`` are scanned.
    """
    if max_power < 1:
        raise ParameterError("max_power must be >= 1")
    af = alpha.astype_float()
    iterated = af
    best = 1.0
    for j in range(1, max_power + 1):
        exps = iterated.offset + np.arange(len(iterated.coeffs))
        mags = np.abs(np.array([float(c) for c in iterated.coeffs]))
        sums = np.zeros(1 << j)
        np.add.at(sums, exps % (1 << j), mags)
        best = max(best, float(np.max(sums)))
        if j < max_power:
            iterated = convolve(iterated, upsample_mask(af, 1 << j))
    return best


def subdivision_norm_inf(alpha: Mask) -> float:
    """Exact sup operator norm of one upscaling step."""
    return max(norm_l1(even_part(alpha)), norm_l1(odd_part(alpha)))


def subdivision_norm_2(alpha: Mask, samples: int = 16384) -> float:
    """Exact l2 operator norm of one upscaling step.

    Equals the sup over the circle of ``sqrt((|alpha(z)|^2 + |alpha(-z)|^2)/2)``
    because upsampling spreads the spectrum over both half-circles.
    """
    vals = np.abs(alpha.symbol(unit_circle(samples))) ** 2
    shifted = np.roll(vals, samples // 2)
    return float(np.sqrt(np.max((vals + shifted) / 2.0)))


def _pnorm(x: np.ndarray, p) -> float:
    if p in (2, 2.0, "2"):
        return float(np.linalg.norm(x))
    if p in (np.inf, math.inf, "inf"):
        return float(np.max(np.abs(x))) if x.size else 0.0
    raise ParameterError(f"only p in {{2, inf}} is supported, got {p!r}")


# ---------------------------------------------------------------------------
# stability experiments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilityTrial:
    """One perturbation trial: measured deviation vs. proven budget."""

    trial: int
    measured: float
    bound: float
    ok: bool


@dataclass(frozen=True)
class StabilityReport:
    kind: str
    mask_id: str
    trials: tuple
    constants: dict

    @property
    def all_ok(self) -> bool:
        return all(t.ok for t in self.trials)


def reconstruction_stability_experiment(
    alpha: Mask,
    pyramid: Pyramid,
    perturbation: float,
    trials: int,
    seed: int = 0,
    sup_norm: float | None = None,
    mask_id: str = "custom",
) -> StabilityReport:
    """Perturb pyramid data and check the synthesis stability bound.

    Each trial adds independent uniform noise of amplitude ``perturbation``
    to the coarse data and every detail level, reconstructs, and verifies
    ``||c - c~||_inf <= K_sub * (||dc0||_inf + sum_l ||dd_l||_inf)`` with the
    empirically estimated upscaling constant ``K_sub``.
    """
    if perturbation < 0:
        raise ParameterError("perturbation must be nonnegative")
    k_sub = estimate_subdivision_sup_norm(alpha) if sup_norm is None else sup_norm
    rng = np.random.default_rng(seed)
    base = reconstruct(pyramid, alpha)
    rows = []
    for t in range(trials):
        dc = rng.uniform(-perturbation, perturbation, pyramid.coarse.size)
        dds = [rng.uniform(-perturbation, perturbation, d.size) for d in pyramid.details]
        perturbed = Pyramid(
            pyramid.coarse + dc,
            tuple(d + dd for d, dd in zip(pyramid.details, dds)),
            pyramid.mask_id,
        )
        measured = float(np.max(np.abs(reconstruct(perturbed, alpha) - base)))
        budget = k_sub * (
            float(np.max(np.abs(dc))) + sum(float(np.max(np.abs(dd))) for dd in dds)
        )
        rows.append(StabilityTrial(t, measured, budget, measured <= budget + 1e-12))
    return StabilityReport(
        "reconstruction", mask_id, tuple(rows), {"sup_norm": k_sub, "perturbation": perturbation}
    )


def decomposition_stability_experiment(
    alpha: Mask,
    p="inf",
    trials: int = 100,
    seed: int = 0,
    length: int = 256,
    levels: int = 6,
    perturbation: float = 1e-3,
    mode: str = "exact",
    kernel: Kernel | None = None,
    mask_id: str = "custom",
) -> StabilityReport:
    """Perturb input data and check the analysis stability bounds in ``l_p``.

    The decimation operator norm is bounded by ``||g||_1`` for ``p = inf``
    and by ``max |g(z)| = 1 / min |ev(z)|`` for ``p = 2``; details use the
    additional factor ``1 + ||S|| * ||D||``.  Each trial verifies both the
    coarse-data inequality and the per-level detail inequalities, and
    records the worst measured-to-bound margin.
    """
    if kernel is None:
        kernel = even_inverse_spectral(alpha)
    if p in (2, 2.0, "2"):
        d_norm = 1.0 / min_modulus_on_circle(even_part(alpha))
        s_norm = subdivision_norm_2(alpha)
    else:
        d_norm = kernel.norm1() + kernel.tol
        s_norm = subdivision_norm_inf(alpha)
    residual_norm = 1.0 + s_norm * d_norm
    rng = np.random.default_rng(seed)
    rows = []
    for t in range(trials):
        c = rng.uniform(-1.0, 1.0, length)
        noise = rng.uniform(-1.0, 1.0, length) * perturbation
        first = decompose(c, alpha, levels, mode=mode, kernel=kernel)
        second = decompose(c + noise, alpha, levels, mode=mode, kernel=kernel)
        din = _pnorm(noise, p)
        checks = [(_pnorm(second.coarse - first.coarse, p), d_norm ** levels * din)]
        for level in range(1, levels + 1):
            checks.append(
                (
                    _pnorm(second.details[level - 1] - first.details[level - 1], p),
                    residual_norm * d_norm ** (levels - level) * din,
                )
            )
        measured, bound = max(checks, key=lambda mb: mb[0] - mb[1])
        ok = all(m <= b + 1e-12 for m, b in checks)
        rows.append(StabilityTrial(t, measured, bound, ok))
    constants = {
        "p": str(p),
        "decimation_norm": d_norm,
        "subdivision_norm": s_norm,
        "residual_norm": residual_norm,
        "levels": levels,
        "perturbation": perturbation,
    }
    return StabilityReport("decomposition", mask_id, tuple(rows), constants)


# ---------------------------------------------------------------------------
# compression
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompressionRow:
    eps: float
    kept_fraction: float
    reconstruction_error: float
    stability_bound: float


@dataclass(frozen=True)
class CompressionReport:
    mask_id: str
    levels: int
    rows: tuple
    constants: dict


def compression_experiment(
    signal,
    alpha: Mask,
    levels: int,
    eps_grid,
    mode: str = "exact",
    kernel: Kernel | None = None,
    sup_norm: float | None = None,
    mask_id: str = "custom",
) -> CompressionReport:
    """Hard-threshold the details over a grid of cutoffs and tabulate errors.

    For each cutoff the report lists the surviving detail fraction, the sup
    reconstruction error against the original signal, and the stability
    budget ``K_sub * sum_l ||d_l - d_l(eps)||_inf`` that provably dominates
    the error.
    """
    signal = as_signal(signal)
    k_sub = estimate_subdivision_sup_norm(alpha) if sup_norm is None else sup_norm
    pyramid = decompose(signal, alpha, levels, mode=mode, kernel=kernel, mask_id=mask_id)
    baseline = reconstruct(pyramid, alpha)
    rows = []
    for eps in eps_grid:
        squeezed, kept, total = threshold_details(pyramid, float(eps))
        rec = reconstruct(squeezed, alpha)
        err = float(np.max(np.abs(rec - baseline)))
        dropped = sum(
            float(np.max(np.abs(d - dt)))
            for d, dt in zip(pyramid.details, squeezed.details)
        )
        rows.append(CompressionRow(float(eps), kept / total if total else 1.0, err, k_sub * dropped))
    return CompressionReport(mask_id, levels, tuple(rows), {"sup_norm": k_sub})
