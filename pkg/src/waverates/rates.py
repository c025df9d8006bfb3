"""Theoretical convergence rates and the Monte Carlo risk engine.

The closed-form rate formulas return the polynomial exponent alpha together
with its regime (dense or sparse branch, and whether the rate is polynomial
in n or in n / log n).  The risk engine estimates E ||estimate - truth||_p^p
over replicated simulations, and the slope fitter regresses log risk on the
log of the normalization to recover the empirical exponent; the asymptotic
"same rate" relation only constrains the ratio of logs, so an ordinary
least-squares slope in log-log coordinates is its finite-sample proxy.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dyadic import CoefficientTree
from .estimators import (
    ThresholdConfig,
    WeightProfile,
    choose_mn,
    density_linear_estimate,
    density_threshold_estimate,
    linear_estimate,
    noise_depth,
    threshold_estimate,
)
from .models import empirical_coefficients, sample_density, simulate_sequence
from .spaces import SmoothnessParams
from .wavelet import WaveletFilter, get_filter, lp_norm, synthesize

__all__ = [
    "RateRegime",
    "RiskRow",
    "RiskTable",
    "SlopeFit",
    "EstimatorSpec",
    "ModelSpec",
    "minimax_rate",
    "linear_minimax_rate",
    "generic_alpha",
    "monte_carlo_risk",
    "fit_slope",
]

RISK_FLOOR = 1e-300
SYNTHESIS_PAD = 6


@dataclass(frozen=True)
class RateRegime:
    """A classified rate: family, branch, exponent and normalization."""

    family: str
    branch: str
    alpha: float
    s_prime: float
    normalization: str

    def __post_init__(self):
        if self.branch not in ("dense", "sparse"):
            raise ValueError(f"branch must be 'dense' or 'sparse', got {self.branch!r}")
        if self.normalization not in ("n", "n_over_log_n"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if not 0.0 < self.alpha <= 0.5:
            raise ValueError(f"alpha must lie in (0, 1/2], got {self.alpha}")

    @property
    def alpha_tilde(self) -> float:
        """The square-root-normalized exponent, exactly twice alpha."""
        return 2.0 * self.alpha


def _s_prime(params: SmoothnessParams) -> float:
    return params.s - max(params.d / params.r - params.d / params.p, 0.0)


def _norm_value(normalization: str, n: int) -> float:
    if normalization == "n":
        return float(n)
    if n < 2:
        raise ValueError("n must be >= 2 for the n / log n normalization")
    return n / math.log(n)


def minimax_rate(params: SmoothnessParams, n: int) -> tuple[RateRegime, float]:
    """Minimax rate over a smoothness ball: regime and its numeric value at n.

    Dense branch when r > d p / (2 s + d): n^{-p s / (2 s + d)}; otherwise
    the sparse branch (n / log n)^{-p (s - d/r + d/p) / (2 (s - d/r) + d)}.
    """
    s, r, p, d = params.s, params.r, params.p, params.d
    if r > d * p / (2.0 * s + d):
        regime = RateRegime("minimax", "dense", s / (2.0 * s + d), _s_prime(params), "n")
    else:
        alpha = (s - d / r + d / p) / (2.0 * (s - d / r) + d)
        regime = RateRegime("minimax", "sparse", alpha, _s_prime(params), "n_over_log_n")
    value = _norm_value(regime.normalization, n) ** (-p * regime.alpha)
    return regime, value


def linear_minimax_rate(params: SmoothnessParams, n: int) -> tuple[RateRegime, float]:
    """Best rate achievable by linear rules: slower than minimax once p > r."""
    s, r, p, d = params.s, params.r, params.p, params.d
    if r > p:
        regime = RateRegime("linear_minimax", "dense", s / (2.0 * s + d), _s_prime(params), "n")
    else:
        sp = s - d / r + d / p
        regime = RateRegime(
            "linear_minimax", "sparse", sp / (2.0 * sp + d), _s_prime(params), "n_over_log_n"
        )
    value = _norm_value(regime.normalization, n) ** (-p * regime.alpha)
    return regime, value


_GENERIC_FAMILIES = {
    "linear": ("generic_linear", "n"),
    "limited": ("limited_lower", "n"),
    "threshold": ("generic_threshold", "n_over_log_n"),
    "elitist": ("elitist_lower", "n_over_log_n"),
}


def generic_alpha(family: str, params: SmoothnessParams) -> RateRegime:
    """Generic (prevalent) rate exponent for an estimator family.

    linear/limited: alpha = s / (2s + d) when r >= p, else s' / (2 s' + d)
    with s' = s - d/r + d/p, polynomial in n.  threshold/elitist:
    alpha = s / (2s + d) when r > p d / (2 s + d), else
    (s - d/r + d/p) / (2 (s - d/r) + d), polynomial in n / log n.
    """
    if family not in _GENERIC_FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(_GENERIC_FAMILIES)}")
    name, normalization = _GENERIC_FAMILIES[family]
    s, r, p, d = params.s, params.r, params.p, params.d
    if family in ("linear", "limited"):
        if r >= p:
            branch, alpha = "dense", s / (2.0 * s + d)
        else:
            sp = s - d / r + d / p
            branch, alpha = "sparse", sp / (2.0 * sp + d)
    else:
        if r > p * d / (2.0 * s + d):
            branch, alpha = "dense", s / (2.0 * s + d)
        else:
            branch, alpha = "sparse", (s - d / r + d / p) / (2.0 * (s - d / r) + d)
    return RateRegime(name, branch, alpha, _s_prime(params), normalization)


# -- Monte Carlo risk ---------------------------------------------------------


@dataclass(frozen=True)
class RiskRow:
    n: int
    empirical_risk: float
    std_error: float
    replicates: int


@dataclass(frozen=True)
class RiskTable:
    """Empirical risks over an increasing n-grid for one estimator and truth."""

    rows: tuple[RiskRow, ...]
    loss_p: float
    estimator_id: str = ""
    truth_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        ns = [row.n for row in self.rows]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("n must be strictly increasing across rows")
        for row in self.rows:
            if row.empirical_risk < 0 or row.std_error < 0:
                raise ValueError("risks and standard errors must be non-negative")

    @property
    def n_values(self) -> np.ndarray:
        return np.array([row.n for row in self.rows], dtype=np.int64)

    @property
    def risks(self) -> np.ndarray:
        return np.array([row.empirical_risk for row in self.rows])


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    r_squared: float
    normalization: str
    implied_alpha: float

    def __post_init__(self):
        if not 0.0 <= self.r_squared <= 1.0 + 1e-12:
            raise ValueError(f"r_squared must lie in [0, 1], got {self.r_squared}")


@dataclass(frozen=True)
class EstimatorSpec:
    """Estimator selection for the risk engine.

    kinds: projection | pinsker | threshold_hard | threshold_soft |
    density_linear | density_threshold.  The linear kinds derive their cutoff
    from choose_mn at the given smoothness; thresholds use kappa.
    """

    kind: str
    smoothness: SmoothnessParams | None = None
    kappa: float = 2.0
    pinsker_order: float = 2.0
    fixed_m_n: float | None = None

    _KINDS = (
        "projection",
        "pinsker",
        "threshold_hard",
        "threshold_soft",
        "density_linear",
        "density_threshold",
    )

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown estimator kind {self.kind!r}")
        needs_cutoff = self.kind in ("projection", "pinsker", "density_linear")
        if needs_cutoff and self.smoothness is None and self.fixed_m_n is None:
            raise ValueError(f"estimator {self.kind!r} needs smoothness parameters or fixed_m_n")

    def cutoff(self, n: int) -> float:
        """The m_n in force at sample size n (fixed override or choose_mn)."""
        if self.fixed_m_n is not None:
            return self.fixed_m_n
        return choose_mn(self.smoothness, n)

    @property
    def needs_density(self) -> bool:
        return self.kind.startswith("density_")

    @property
    def family(self) -> str:
        return "linear" if self.kind in ("projection", "pinsker", "density_linear") else "threshold"


@dataclass(frozen=True)
class ModelSpec:
    """Observation model for the risk engine.

    j_max fixes the observed depth; when omitted, sequence observations use
    the truth's depth and density coefficients run to the noise depth j(n)
    (or the linear cutoff for the projection-form density estimator).
    """

    kind: str
    filter_name: str = "db2"
    j_max: int | None = None

    def __post_init__(self):
        if self.kind not in ("sequence", "density"):
            raise ValueError(f"model kind must be 'sequence' or 'density', got {self.kind!r}")


def _linear_cutoff_level(m_n: float) -> int:
    """Largest level kept by the projection profile: max j with 2^j < m_n."""
    if m_n <= 1.0:
        return -1
    j = math.ceil(math.log2(m_n)) - 1
    if 2.0 ** (j + 1) < m_n:
        j += 1
    elif 2.0**j >= m_n:
        j -= 1
    return j


def _loss(diff: CoefficientTree, p: float, filt: WaveletFilter) -> float:
    """||diff||_p^p: exact coefficient-space identity for p = 2, grid quadrature else."""
    if p == 2.0:
        return diff.total_energy()
    res = diff.j_max + SYNTHESIS_PAD
    return lp_norm(synthesize(diff, filt, res), p) ** p


def _one_replicate(truth, est, model, n, p, filt, seed):
    if model.kind == "sequence":
        obs_depth = model.j_max if model.j_max is not None else truth.j_max
        obs = simulate_sequence(truth, n, obs_depth, seed)
        if est.kind == "projection":
            estimate = linear_estimate(obs, WeightProfile.projection(est.cutoff(n)))
        elif est.kind == "pinsker":
            m_levels = math.log2(est.cutoff(n))
            estimate = linear_estimate(obs, WeightProfile.pinsker(m_levels, est.pinsker_order))
        elif est.kind in ("threshold_hard", "threshold_soft"):
            mode = "hard" if est.kind == "threshold_hard" else "soft"
            estimate = threshold_estimate(obs, ThresholdConfig(n=n, kappa=est.kappa, mode=mode))
        else:
            raise ValueError(f"estimator {est.kind!r} cannot run on a sequence observation")
    else:
        if not est.needs_density:
            raise ValueError(f"estimator {est.kind!r} cannot run on a density sample")
        sample = sample_density(truth, filt, n, seed)
        if est.kind == "density_linear":
            cutoff = _linear_cutoff_level(est.cutoff(n))
            depth = model.j_max if model.j_max is not None else max(cutoff, 0)
            beta = empirical_coefficients(sample, filt, depth)
            estimate = density_linear_estimate(beta, cutoff)
        else:
            depth = model.j_max if model.j_max is not None else noise_depth(n)
            beta = empirical_coefficients(sample, filt, depth)
            estimate = density_threshold_estimate(beta, n)
    return _loss(estimate - truth, p, filt)


def monte_carlo_risk(
    truth: CoefficientTree,
    estimator_cfg: EstimatorSpec,
    model_cfg: ModelSpec,
    n_grid,
    R: int,
    p: float,
    master_seed: int,
    threads: int = 1,
) -> RiskTable:
    """Empirical risk E ||estimate - truth||_p^p over an increasing n-grid.

    Each of the R replicates at each n simulates, estimates and evaluates the
    loss with a seed derived from (master_seed, n, replicate), so the table is
    bit-identical across reruns and independent of scheduling; replicates may
    evaluate on a thread pool, the reduction order is fixed.
    """
    n_grid = [int(n) for n in n_grid]
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])) or not n_grid:
        raise ValueError("n_grid must be nonempty and strictly increasing")
    if R < 2:
        raise ValueError("need at least 2 replicates for a standard error")
    if estimator_cfg.needs_density != (model_cfg.kind == "density"):
        raise ValueError(
            f"estimator {estimator_cfg.kind!r} is incompatible with the {model_cfg.kind} model"
        )
    filt = get_filter(model_cfg.filter_name)
    losses = np.empty((len(n_grid), R))

    def task(i_rep):
        i, rep = i_rep
        n = n_grid[i]
        seed = np.random.SeedSequence((master_seed, n, rep))
        return i, rep, _one_replicate(truth, estimator_cfg, model_cfg, n, p, filt, seed)

    jobs = [(i, rep) for i in range(len(n_grid)) for rep in range(R)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, rep, value in pool.map(task, jobs):
                losses[i, rep] = value
    else:
        for job in jobs:
            i, rep, value = task(job)
            losses[i, rep] = value

    rows = tuple(
        RiskRow(
            n=n,
            empirical_risk=float(np.mean(losses[i])),
            std_error=float(np.std(losses[i], ddof=1) / math.sqrt(R)),
            replicates=R,
        )
        for i, n in enumerate(n_grid)
    )
    return RiskTable(rows=rows, loss_p=p, estimator_id=estimator_cfg.kind)


def fit_slope(table: RiskTable, normalization: str) -> SlopeFit:
    """OLS of log risk on the log of n (or n / log n); implied_alpha = -slope / p."""
    if len(table.rows) < 4:
        raise ValueError("need at least 4 rows to fit a slope")
    x = np.array([math.log(_norm_value(normalization, row.n)) for row in table.rows])
    risks = table.risks
    if np.any(risks <= 0.0):
        warnings.warn("non-positive risks clipped before log-log fit", stacklevel=2)
        risks = np.maximum(risks, RISK_FLOOR)
    y = np.log(risks)
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    fitted = design @ np.array([slope, intercept])
    sse = float(np.sum((y - fitted) ** 2))
    sst = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if sst == 0.0 else max(0.0, 1.0 - sse / sst)
    return SlopeFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=min(r_squared, 1.0),
        normalization=normalization,
        implied_alpha=float(-slope / table.loss_p),
    )
