"""Wavelet shrinkage estimators, Besov-scale functionals, and Monte Carlo
verification that their generic convergence rates match the minimax exponents.

The package is organized around a single data structure, the dyadic
``CoefficientTree``: truths, observations and estimates all live in it.
``wavelet`` moves between trees and grid functions on [0, 1]; ``spaces``
measures trees (Besov norms, weak functionals, scaling functions);
``generic`` builds the explicit saturating function and its probe line;
``models`` simulates observations; ``estimators`` maps observations to
estimates; ``rates`` holds the closed-form exponents and the risk engine;
``cli`` orchestrates reproducible experiments from JSON configs.
"""

from .dyadic import CoefficientTree, LevelIndex, level_count, reduce_dyadic
from .estimators import (
    ShrinkageClass,
    ShrinkageTrace,
    ThresholdConfig,
    WeightProfile,
    choose_mn,
    classify_rule,
    density_linear_estimate,
    density_threshold_estimate,
    linear_estimate,
    noise_depth,
    shrinkage_trace,
    threshold_estimate,
    universal_threshold,
)
from .generic import (
    GenericFunctionSpec,
    ProbeDraw,
    build_g,
    probe_perturb,
    weak_exclusion_witness,
)
from .models import (
    DensitySample,
    SequenceObservation,
    empirical_coefficients,
    sample_density,
    simulate_sequence,
)
from .rates import (
    EstimatorSpec,
    ModelSpec,
    RateRegime,
    RiskRow,
    RiskTable,
    SlopeFit,
    fit_slope,
    generic_alpha,
    linear_minimax_rate,
    minimax_rate,
    monte_carlo_risk,
)
from .spaces import (
    ScalingFunctionEstimate,
    SmoothnessParams,
    WeakBesovParams,
    besov_norm,
    empirical_scaling,
    theoretical_scaling,
    theoretical_weak_scaling,
    weak_besov_functional,
)
from .truths import (
    bump_tree,
    density_truth_tree,
    probe_line_truth,
    shell_tree,
    uniform_density_tree,
)
from .wavelet import (
    GridSignal,
    WaveletFilter,
    analyze,
    get_filter,
    lp_norm,
    synthesize,
)

__version__ = "0.1.0"
