"""Decay reports, stability experiments, compression sweeps."""

import math

import numpy as np
import pytest

from evenrev import (
    ParameterError,
    bspline_mask,
    compression_experiment,
    dd_mask,
    decay_report,
    decompose,
    decomposition_stability_experiment,
    derivative_bound,
    estimate_subdivision_sup_norm,
    even_inverse_spectral,
    filter_moment_constants,
    pseudo_spline_mask,
    reconstruct,
    reconstruction_stability_experiment,
    sample_function,
    subdivide,
)
from evenrev.analysis import subdivision_norm_2, subdivision_norm_inf
from evenrev.inverse import SQRT2_RATIO
from evenrev.laurent import difference
from evenrev.transform import Pyramid


# ---------------------------------------------------------------------------
# test functions
# ---------------------------------------------------------------------------


def test_sample_function_sine():
    got = sample_function("sine", 3, 2)
    assert got.size == 16
    expected = np.sin(2 * np.pi * np.arange(16) / 8.0)
    assert np.max(np.abs(got - expected)) < 1e-15
    assert derivative_bound("sine") == 2 * np.pi


def test_sample_function_difference_bound():
    for kind in ("sine", "gaussian_bump", "poly"):
        for j in (4, 7):
            c = sample_function(kind, j, 2)
            bound = derivative_bound(kind) * 2.0 ** -j
            assert np.max(np.abs(difference(c))) <= bound + 1e-15


def test_sample_function_constant_poly_has_zero_differences():
    c = sample_function("poly", 5, 2, params={"cos": (), "sin": ()})
    assert np.max(np.abs(difference(c))) == 0.0
    assert derivative_bound("poly", {"cos": (), "sin": ()}) == 0.0


def test_sample_function_rejects_unknown_kind():
    with pytest.raises(ParameterError):
        sample_function("sawtooth", 3, 2)
    with pytest.raises(ParameterError):
        sample_function("sine", 3, 1)  # base must be >= 2


# ---------------------------------------------------------------------------
# moment constants
# ---------------------------------------------------------------------------


def test_moment_constants_quadratic():
    kern = even_inverse_spectral(bspline_mask(3))
    moments = filter_moment_constants(bspline_mask(3), kern)
    assert abs(moments.k_alpha - 1.5) < 1e-15


def test_moment_constants_interpolatory():
    mask = dd_mask(2)
    kern = even_inverse_spectral(mask)
    moments = filter_moment_constants(mask, kern)
    assert moments.k_gamma == 0.0
    assert abs(moments.k_combined - moments.k_alpha * 1.0) < 1e-15


def test_moment_constants_cubic_closed_form():
    # 2 * 2*sqrt(2) * sum k r^k = 4*sqrt(2)*r/(1-r)^2 collapses to sqrt(2)
    kern = even_inverse_spectral(bspline_mask(4))
    moments = filter_moment_constants(bspline_mask(4), kern)
    closed = 4.0 * math.sqrt(2.0) * SQRT2_RATIO / (1.0 - SQRT2_RATIO) ** 2
    assert abs(closed - math.sqrt(2.0)) < 1e-14
    assert abs(moments.k_gamma - closed) < 1e-9


# ---------------------------------------------------------------------------
# decay report
# ---------------------------------------------------------------------------


def test_decay_report_inequalities_cubic():
    report = decay_report("sine", 8, 2, bspline_mask(4))
    combined = report.constants["k_combined"]
    for row in report.rows:
        assert row.delta_norm <= row.bound_delta + 1e-12, row
        if row.level:
            assert row.detail_norm <= combined * row.delta_norm + 1e-12, row
            assert row.detail_norm <= row.bound_detail + 1e-12, row


def test_decay_report_interpolatory_depth_independent():
    mask = dd_mask(2)
    kern = even_inverse_spectral(mask)
    long = decay_report("sine", 10, 2, mask, kernel=kern)
    short = decay_report("sine", 7, 2, mask, kernel=kern)
    assert abs(long.constants["gamma_norm1"] - 1.0) < 1e-12
    for level in range(1, 8):
        assert abs(long.row(level).bound_detail - short.row(level).bound_detail) < 1e-12


def test_decay_report_constant_signal_zero_norms():
    report = decay_report("poly", 6, 2, bspline_mask(4), params={"cos": (), "sin": ()})
    for row in report.rows:
        assert row.delta_norm == 0.0
        assert row.bound_delta >= 0.0
        if row.level:
            assert row.detail_norm < 1e-15


def test_decay_report_level_zero_has_no_detail():
    report = decay_report("sine", 5, 2, bspline_mask(3))
    assert report.row(0).detail_norm is None
    assert report.row(0).bound_detail is None
    assert len(report.rows) == 6


def test_decay_report_kernel_mode():
    mask = bspline_mask(4)
    kern = even_inverse_spectral(mask, tol=1e-12)
    report = decay_report("sine", 6, 2, mask, mode="kernel", kernel=kern)
    combined = report.constants["k_combined"]
    for row in report.rows:
        assert row.delta_norm <= row.bound_delta + 1e-12
        if row.level:
            assert row.detail_norm <= combined * row.delta_norm + 1e-12


# ---------------------------------------------------------------------------
# subdivision operator norms
# ---------------------------------------------------------------------------


def test_sup_norm_estimate_is_one_for_bsplines():
    # nonnegative normalized rows: every power has unit row sums
    for order in (2, 3, 4, 5):
        assert abs(estimate_subdivision_sup_norm(bspline_mask(order), 8) - 1.0) < 1e-12


def test_sup_norm_estimate_exceeds_one_for_dd():
    val = estimate_subdivision_sup_norm(dd_mask(2), 8)
    assert val >= subdivision_norm_inf(dd_mask(2)) - 1e-12
    assert val > 1.0


def test_one_step_norms_dominate_random_applications():
    rng = np.random.default_rng(12)
    for mask in (bspline_mask(3), dd_mask(2), pseudo_spline_mask(6, 1)):
        ninf = subdivision_norm_inf(mask)
        n2 = subdivision_norm_2(mask)
        for _ in range(25):
            c = rng.uniform(-1, 1, 32)
            out = subdivide(mask, c)
            assert np.max(np.abs(out)) <= ninf * np.max(np.abs(c)) + 1e-12
            assert np.linalg.norm(out) <= n2 * np.linalg.norm(c) + 1e-12


# ---------------------------------------------------------------------------
# reconstruction stability
# ---------------------------------------------------------------------------


def _pyramid(mask, length=128, levels=4, seed=13):
    rng = np.random.default_rng(seed)
    c = rng.uniform(-1, 1, length)
    return c, decompose(c, mask, levels)


def test_reconstruction_stability_zero_perturbation():
    mask = bspline_mask(4)
    _, pyr = _pyramid(mask)
    report = reconstruction_stability_experiment(mask, pyr, 0.0, 5, seed=1)
    assert all(t.measured == 0.0 for t in report.trials)
    assert report.all_ok


def test_reconstruction_stability_single_top_detail_entry():
    mask = bspline_mask(4)
    _, pyr = _pyramid(mask)
    delta = 1e-3
    bumped = [d.copy() for d in pyr.details]
    bumped[-1][5] += delta
    other = Pyramid(pyr.coarse, tuple(bumped))
    diff = np.abs(reconstruct(other, mask) - reconstruct(pyr, mask))
    assert abs(np.max(diff) - delta) <= 1e-12 * (1 + delta)
    assert np.argmax(diff) == 5


def test_reconstruction_stability_trials_hold():
    for mask in (bspline_mask(3), dd_mask(2)):
        _, pyr = _pyramid(mask)
        report = reconstruction_stability_experiment(mask, pyr, 1e-3, 50, seed=3)
        assert report.all_ok
        assert report.constants["sup_norm"] >= 1.0


# ---------------------------------------------------------------------------
# decomposition stability
# ---------------------------------------------------------------------------


def test_decomposition_stability_identical_inputs():
    mask = bspline_mask(4)
    report = decomposition_stability_experiment(
        mask, p="inf", trials=3, seed=5, perturbation=0.0
    )
    assert all(t.measured == 0.0 for t in report.trials)


def test_decomposition_stability_interpolatory_ratios():
    mask = dd_mask(2)
    report = decomposition_stability_experiment(mask, p="inf", trials=30, seed=6)
    assert report.all_ok
    assert abs(report.constants["decimation_norm"] - 1.0) < 1e-11


def test_decomposition_stability_cubic_l2_constant():
    mask = bspline_mask(4)
    report = decomposition_stability_experiment(mask, p=2, trials=30, seed=7)
    assert report.all_ok
    assert abs(report.constants["decimation_norm"] - 2.0) < 1e-9


def test_decomposition_stability_rejects_other_p():
    with pytest.raises(ParameterError):
        decomposition_stability_experiment(bspline_mask(3), p=3, trials=1)


# ---------------------------------------------------------------------------
# compression
# ---------------------------------------------------------------------------


def test_compression_experiment_grid():
    signal = sample_function("sine", 7, 2)
    report = compression_experiment(signal, bspline_mask(4), 5, [0.0, 1e-6, 1e-3, math.inf])
    rows = report.rows
    assert rows[0].reconstruction_error == 0.0
    assert rows[-1].kept_fraction == 0.0
    for row in rows:
        assert row.reconstruction_error <= row.stability_bound + 1e-12
    # monotone: larger cutoff keeps fewer entries
    kept = [row.kept_fraction for row in rows]
    assert all(a >= b for a, b in zip(kept, kept[1:]))


def test_compression_budget_scales_with_levels():
    signal = sample_function("sine", 7, 2)
    levels = 5
    eps = 1e-6
    report = compression_experiment(signal, bspline_mask(4), levels, [eps])
    row = report.rows[0]
    assert row.reconstruction_error <= report.constants["sup_norm"] * levels * eps + 1e-12


def test_compression_infinite_cutoff_is_pure_subdivision():
    signal = sample_function("sine", 6, 2)
    mask = bspline_mask(4)
    pyr = decompose(signal, mask, 4)
    report = compression_experiment(signal, mask, 4, [math.inf])
    c = pyr.coarse
    for _ in range(4):
        c = subdivide(mask, c)
    baseline = reconstruct(pyr, mask)
    assert abs(report.rows[0].reconstruction_error - np.max(np.abs(c - baseline))) < 1e-12
