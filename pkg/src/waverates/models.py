"""Observation models: the Gaussian sequence model and i.i.d. density sampling.

Sequence observations add independent Gaussian noise of standard deviation
n^{-1/2} to every coefficient up to the requested depth (zero coefficients
included -- the model observes the full sequence).  Density samples are drawn
from the normalized, nonnegative part of a wavelet-specified density by
inverse CDF on a fine dyadic grid, and empirical coefficients average the
periodized wavelet evaluated at the sample points.

All generation is deterministic given the seed.  Replicated experiments
derive per-replicate seeds from a master seed through numpy's SeedSequence
spawning, which guarantees distinct, non-overlapping streams.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dyadic import CoefficientTree
from .wavelet import GridSignal, WaveletFilter, synthesize

__all__ = [
    "SequenceObservation",
    "DensitySample",
    "simulate_sequence",
    "sample_density",
    "empirical_coefficients",
]

DENSITY_GRID_PAD = 8


@dataclass(frozen=True)
class SequenceObservation:
    """Observed coefficients y = theta + n^{-1/2} v, all indices up to depth j_max."""

    n: int
    y: CoefficientTree
    truth_ref: str = ""
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def noise_std(self) -> float:
        return self.n**-0.5


@dataclass(frozen=True)
class DensitySample:
    """n i.i.d. draws from a density on [0, 1]."""

    n: int
    points: np.ndarray
    truth_ref: str = ""
    seed: int = 0

    def __post_init__(self):
        points = np.asarray(self.points, dtype=np.float64)
        if self.n < 1 or points.shape != (self.n,):
            raise ValueError(f"expected {self.n} points, got shape {points.shape}")
        if points.size and (points.min() < 0.0 or points.max() > 1.0):
            raise ValueError("sample points must lie in [0, 1]")
        points = points.copy()
        points.flags.writeable = False
        object.__setattr__(self, "points", points)


def _resolve_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    return np.random.default_rng(np.random.SeedSequence(seed))


def simulate_sequence(
    theta: CoefficientTree, n: int, j_max: int, seed, truth_ref: str = ""
) -> SequenceObservation:
    """Observe theta under Gaussian noise of standard deviation n^{-1/2}.

    Every index up to j_max receives noise, including indices where theta is
    zero; the scaling coefficient is observed under the same noise law.  The
    draw order (scaling first, then levels in increasing j) is fixed, so the
    observation is bit-identical for identical inputs.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if j_max < 0:
        raise ValueError("j_max must be >= 0")
    rng = _resolve_rng(seed)
    sigma = n**-0.5
    scaling = theta.scaling + sigma * rng.standard_normal()
    shape = lambda j: (1 << j,) * theta.d
    levels = {}
    for j in range(j_max + 1):
        noise = sigma * rng.standard_normal(shape(j))
        base = theta.levels.get(j)
        levels[j] = noise if base is None else base + noise
    y = CoefficientTree(d=theta.d, j_max=j_max, scaling=scaling, levels=levels)
    seed_repr = seed if isinstance(seed, int) else 0
    return SequenceObservation(n=n, y=y, truth_ref=truth_ref, seed=seed_repr)


def sample_density(
    f_tree: CoefficientTree, filt: WaveletFilter, n: int, seed, truth_ref: str = ""
) -> DensitySample:
    """Draw n i.i.d. points from the density specified by a coefficient tree.

    The tree is synthesized on a fine grid (resolution j_max + 8), negative
    values are clipped to zero and the result renormalized to unit mass; the
    points are drawn exactly from that piecewise-constant density by inverse
    CDF.  Raises if the reconstruction is nonpositive everywhere.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    res = f_tree.j_max + DENSITY_GRID_PAD
    values = synthesize(f_tree, filt, res).samples
    values = np.clip(values, 0.0, None)
    total = values.sum()
    if total <= 0.0:
        raise ValueError("density is identically zero after clipping")
    masses = values / total
    cum = np.cumsum(masses)
    cum[-1] = 1.0
    rng = _resolve_rng(seed)
    u = rng.random(n)
    cells = np.searchsorted(cum, u, side="left")
    left = np.where(cells > 0, cum[cells - 1], 0.0)
    frac = (u - left) / masses[cells]
    points = (cells + np.clip(frac, 0.0, 1.0)) / (1 << res)
    seed_repr = seed if isinstance(seed, int) else 0
    return DensitySample(n=n, points=points, truth_ref=truth_ref, seed=seed_repr)


_PSI_GRID_CACHE: dict[tuple[str, int], np.ndarray] = {}


def _wavelet_grid(j: int, filt: WaveletFilter) -> np.ndarray:
    """Grid values of the periodized wavelet at scale j, position 0.

    Evaluated on the level's own fine grid (resolution j + DENSITY_GRID_PAD)
    and cached per (filter, level): positions within a level are circular
    shifts of position 0, so one grid serves every k.
    """
    key = (filt.name, j)
    grid = _PSI_GRID_CACHE.get(key)
    if grid is None:
        e = np.zeros(1 << j)
        e[0] = 1.0
        single = CoefficientTree(d=1, j_max=j, scaling=0.0, levels={j: e})
        grid = synthesize(single, filt, j + DENSITY_GRID_PAD).samples
        _PSI_GRID_CACHE[key] = grid
    return grid


def empirical_coefficients(
    sample: DensitySample, filt: WaveletFilter, j_max: int
) -> CoefficientTree:
    """Empirical wavelet coefficients (1/n) sum_i psi_{j,k}(X_i).

    The wavelet is evaluated by synthesizing the single-coefficient tree on a
    fine grid (resolution j + 8 for level j) and looking up each point's
    cell.  Within a level the positions are circular shifts of position 0, so
    the level is assembled from weighted bin counts over the compact support
    instead of evaluating each (j, k) separately.
    """
    if sample.n < 1 or sample.points.size == 0:
        raise ValueError("empty sample")
    if j_max < 0:
        raise ValueError("j_max must be >= 0")
    inv_n = 1.0 / sample.n
    # scaling function: constant 1 on [0, 1] after periodization
    scaling = float(
        np.sum(synthesize(CoefficientTree(d=1, j_max=0, scaling=1.0), filt, DENSITY_GRID_PAD)
               .samples[_cells(sample.points, DENSITY_GRID_PAD)]) * inv_n
    )
    stride = 1 << DENSITY_GRID_PAD
    levels = {}
    for j in range(j_max + 1):
        psi = _wavelet_grid(j, filt)
        res = j + DENSITY_GRID_PAD
        n_pos = 1 << j
        cells = _cells(sample.points, res)
        block = cells >> DENSITY_GRID_PAD
        phase = cells & (stride - 1)
        nz = np.flatnonzero(np.abs(psi) > 0.0)
        support_blocks = min(int(nz[-1] >> DENSITY_GRID_PAD) + 1, n_pos) if nz.size else 0
        beta = np.zeros(n_pos)
        for m in range(support_blocks):
            vals = psi[phase + m * stride]
            k = (block - m) % n_pos
            beta += np.bincount(k, weights=vals, minlength=n_pos)
        levels[j] = beta * inv_n
    return CoefficientTree(d=1, j_max=j_max, scaling=scaling, levels=levels)


def _cells(points: np.ndarray, res: int) -> np.ndarray:
    n_cells = 1 << res
    return np.minimum((points * n_cells).astype(np.int64), n_cells - 1)
