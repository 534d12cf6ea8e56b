"""Threshold compression: zero the small details, reconstruct, compare.

Because even-indexed details vanish by construction, half the detail budget
is free before any thresholding; cutting the remaining small odd entries
trades reconstruction error for storage, and the synthesis stability bound
caps that error by the sum of what was removed.
"""

import numpy as np

from evenrev import bspline_mask, compression_experiment, sample_function

signal = sample_function("gaussian_bump", 8, 2)  # 512 samples of a smooth bump
mask = bspline_mask(4)

report = compression_experiment(signal, mask, 6, [0.0, 1e-8, 1e-6, 1e-4, 1e-2, np.inf])
print("Smooth periodic bump, cubic-spline pyramid, 6 levels, 512 samples")
print(f"subdivision sup-norm constant: {report.constants['sup_norm']:.4f}\n")
print(f"{'cutoff':>10} {'kept':>7} {'error':>12} {'stability bound':>16}")
for row in report.rows:
    print(
        f"{row.eps:>10.1e} {row.kept_fraction:7.2%} "
        f"{row.reconstruction_error:12.3e} {row.stability_bound:16.3e}"
    )
print("\nThe measured error never exceeds the bound, and a cutoff of 1e-6")
print("already drops most entries of a smooth signal at negligible error.")
