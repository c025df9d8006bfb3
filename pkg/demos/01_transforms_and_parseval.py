"""Periodized wavelet transforms on [0, 1]: round trips, Parseval, vanishing moments."""

import numpy as np

from waverates import CoefficientTree, GridSignal, analyze, get_filter, lp_norm, synthesize

rng = np.random.default_rng(0)

# a noisy signal on 512 midpoints and its exact orthogonal decomposition
filt = get_filter("db4")
signal = GridSignal(9, np.sin(2 * np.pi * (np.arange(512) + 0.5) / 512) + 0.1 * rng.standard_normal(512))
tree = analyze(signal, filt, j_max=8)

back = synthesize(tree, filt, 9)
print("round-trip error:", np.max(np.abs(back.samples - signal.samples)))

# Parseval: grid quadrature of the squared signal equals the coefficient energy
print("quadrature L2^2:", lp_norm(signal, 2.0) ** 2)
print("coefficient energy:", tree.total_energy())

# vanishing moments: a constant has no wavelet content at all
flat = analyze(GridSignal(9, np.full(512, 3.7)), filt, 8)
print("constant signal: scaling =", flat.scaling, " wavelet energy =", flat.wavelet_energy())

# a single deep coefficient synthesizes to one localized bump
bump = CoefficientTree.from_items(1, 6, 0.0, [((6, 40), 1.0)])
sig = synthesize(bump, filt, 12)
support = np.flatnonzero(np.abs(sig.samples) > 1e-12)
print("single coefficient at level 6 occupies cells", support[0], "to", support[-1], "of 4096")
