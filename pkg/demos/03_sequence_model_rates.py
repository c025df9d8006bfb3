"""Monte Carlo risk of thresholding vs projection in the sequence model.

Observes y = theta + noise/sqrt(n) at every dyadic index, estimates with the
universal hard threshold and with the bias-variance-tuned projection, and
fits log risk against the log of the rate normalization.  In the dense
regime (r >= p) both families share the exponent s/(2s+d); in the sparse
regime (p > r) thresholding provably beats every linear rule, and the fitted
slopes show the gap at simulation scale.
"""

from waverates import (
    EstimatorSpec,
    ModelSpec,
    SmoothnessParams,
    fit_slope,
    generic_alpha,
    monte_carlo_risk,
    probe_line_truth,
)

N_GRID = [2**j for j in range(10, 17)]
MODEL = ModelSpec(kind="sequence", filter_name="db2")


def experiment(name, params, truth, estimator):
    regime = generic_alpha(estimator.family, params)
    table = monte_carlo_risk(truth, estimator, MODEL, N_GRID, 24,
                             params.p, master_seed=2024, threads=4)
    fit = fit_slope(table, regime.normalization)
    print(f"{name}: implied alpha {fit.implied_alpha:.4f} "
          f"(theory {regime.alpha:.4f}, {regime.branch} branch, "
          f"x = {regime.normalization}, r^2 = {fit.r_squared:.4f})")
    return table


print("dense regime: s=2, r=2, p=2")
dense = SmoothnessParams(s=2, r=2, p=2, d=1)
truth = probe_line_truth(2, 2, 1, 14, base_amplitude=1024.0, alpha=0.7, dither=2.0)
table = experiment("  hard threshold", dense, truth, EstimatorSpec("threshold_hard", kappa=2.0))
experiment("  projection     ", dense, truth, EstimatorSpec("projection", smoothness=dense))
print("  (the projection run is bias-dominated at this amplitude and short grid, so its")
print("   finite-scale slope overshoots; the theory value is a floor, not a match target)")

print("\nrisk table (hard threshold):")
print("  n        risk          std_error")
for row in table.rows:
    print(f"  {row.n:<8d} {row.empirical_risk:<13.6g} {row.std_error:.2g}")

print("\nsparse regime: s=1.2, r=1, p=4 (thresholding beats linear)")
sparse = SmoothnessParams(s=1.2, r=1, p=4, d=1)
truth = probe_line_truth(1.2, 1, 1, 12, base_amplitude=2.0, alpha=0.7, dither=2.0)
experiment("  hard threshold", sparse, truth, EstimatorSpec("threshold_hard", kappa=2.0))
experiment("  projection     ", sparse, truth, EstimatorSpec("projection", smoothness=sparse))
