import numpy as np
import pytest

from waverates.dyadic import CoefficientTree
from waverates.wavelet import (
    DAUBECHIES_LOWPASS,
    GridSignal,
    WaveletFilter,
    analyze,
    get_filter,
    lp_norm,
    synthesize,
)

FILTERS = ["haar", "db2", "db3", "db4", "db6", "db8", "db10"]


@pytest.mark.parametrize("vm", sorted(DAUBECHIES_LOWPASS))
def test_filter_tables_orthonormal(vm):
    taps = np.array(DAUBECHIES_LOWPASS[vm])
    assert abs(taps.sum() - np.sqrt(2.0)) < 1e-12
    assert abs(taps @ taps - 1.0) < 1e-12
    for m in range(1, vm):
        assert abs(taps[2 * m :] @ taps[: len(taps) - 2 * m]) < 1e-12
    filt = get_filter(f"db{vm}")
    assert filt.vanishing_moments == vm
    assert filt.support_width == 2 * vm - 1


def test_filter_validation_rejects_bad_taps():
    with pytest.raises(ValueError):
        WaveletFilter("bad", np.array([1.0, 0.5]), 1)
    with pytest.raises(KeyError):
        get_filter("db11")


def periodized_haar(j, k, x):
    """2^{j/2} psi(2^j x - k) on [0, 1), psi = +1 on [0, 1/2), -1 on [1/2, 1)."""
    u = np.mod(2.0**j * x - k, 2.0**j)
    return 2.0 ** (j / 2.0) * np.where(u < 0.5, 1.0, np.where(u < 1.0, -1.0, 0.0))


def test_analyze_matches_haar_inner_product_oracle():
    # brute-force midpoint quadrature against explicit periodized Haar functions
    rng = np.random.default_rng(42)
    res = 9
    sig = GridSignal(res, rng.standard_normal(1 << res))
    tree = analyze(sig, get_filter("haar"), 5)
    x = sig.grid()
    assert abs(tree.scaling - np.mean(sig.samples)) < 1e-12
    for j in range(6):
        for k in range(1 << j):
            oracle = np.mean(sig.samples * periodized_haar(j, k, x))
            assert abs(tree.get(j, k) - oracle) < 1e-10, (j, k)


def test_analyze_special_cases():
    filt = get_filter("db4")
    tree = analyze(GridSignal(6, np.full(64, 2.5)), filt, 4)
    assert abs(tree.scaling - 2.5) < 1e-12
    assert tree.wavelet_energy() < 1e-24  # vanishing moments kill constants

    a = 0.8
    tr = analyze(GridSignal(2, a * np.array([1.0, 1.0, -1.0, -1.0])), get_filter("haar"), 1)
    assert abs(tr.get(0, 0) - a) < 1e-12
    assert abs(tr.scaling) < 1e-12
    assert abs(tr.get(1, 0)) < 1e-12 and abs(tr.get(1, 1)) < 1e-12


@pytest.mark.parametrize("name", FILTERS)
def test_round_trip_both_ways(name):
    filt = get_filter(name)
    rng = np.random.default_rng(3)
    res = 8
    sig = GridSignal(res, rng.standard_normal(1 << res))
    tree = analyze(sig, filt, res - 1)
    assert np.max(np.abs(synthesize(tree, filt, res).samples - sig.samples)) < 1e-10

    # sparse tree -> signal -> tree
    sparse = CoefficientTree.from_items(
        1, 5, 0.7, [((2, 1), 1.0), ((4, 9), -0.3), ((5, 17), 0.05)]
    )
    back = analyze(synthesize(sparse, filt, res), filt, 5)
    assert abs(back.scaling - sparse.scaling) < 1e-10
    for j in range(6):
        assert np.max(np.abs(back.level(j) - sparse.level(j))) < 1e-10


def test_analyze_deeper_than_tree_sees_zeros():
    filt = get_filter("db3")
    sparse = CoefficientTree.from_items(1, 3, 0.2, [((2, 3), 1.0)])
    sig = synthesize(sparse, filt, 9)
    deep = analyze(sig, filt, 8)
    for j in range(4, 9):
        assert np.max(np.abs(deep.level(j))) < 1e-10


def test_synthesize_single_haar_coefficient():
    tree = CoefficientTree.from_items(1, 2, 0.0, [((2, 1), 1.0)])
    sig = synthesize(tree, get_filter("haar"), 6)
    x = sig.grid()
    assert np.allclose(sig.samples, periodized_haar(2, 1, x))


def test_synthesize_constant():
    tree = CoefficientTree(1, 0, scaling=1.0)
    sig = synthesize(tree, get_filter("db5"), 7)
    assert np.max(np.abs(sig.samples - 1.0)) < 1e-12


def test_linearity():
    filt = get_filter("db2")
    rng = np.random.default_rng(11)
    s1 = rng.standard_normal(128)
    s2 = rng.standard_normal(128)
    a, b = 1.7, -0.4
    t1 = analyze(GridSignal(7, s1), filt, 5)
    t2 = analyze(GridSignal(7, s2), filt, 5)
    t12 = analyze(GridSignal(7, a * s1 + b * s2), filt, 5)
    combo = a * t1 + b * t2
    assert abs(t12.scaling - combo.scaling) < 1e-10
    for j in range(6):
        assert np.max(np.abs(t12.level(j) - combo.level(j))) < 1e-10


@pytest.mark.parametrize("name", ["haar", "db4", "db7"])
def test_parseval(name):
    filt = get_filter(name)
    rng = np.random.default_rng(23)
    tree = CoefficientTree(
        1, 6, rng.standard_normal(), {j: rng.standard_normal(1 << j) for j in range(7)}
    )
    sig = synthesize(tree, filt, 12)  # resolution j_max + 6
    lhs = lp_norm(sig, 2.0) ** 2
    assert abs(lhs - tree.total_energy()) / tree.total_energy() < 1e-8


def test_lp_norm_values():
    sig = GridSignal(5, np.full(32, -1.25))
    for p in (1.0, 2.0, 3.5):
        assert abs(lp_norm(sig, p) - 1.25) < 1e-12
    step = GridSignal(4, np.r_[np.ones(8), np.zeros(8)])
    assert abs(lp_norm(step, 4.0) - 0.5**0.25) < 1e-12
    with pytest.raises(ValueError):
        lp_norm(step, 0.5)


def test_transform_errors():
    filt = get_filter("db2")
    sig = GridSignal(4, np.zeros(16))
    with pytest.raises(ValueError):
        analyze(sig, filt, 4)  # j_max must be < resolution
    with pytest.raises(ValueError):
        analyze(GridSignal(1, np.zeros(2)), get_filter("db4"), 0)  # filter too long
    tree = CoefficientTree.zeros(1, 5)
    with pytest.raises(ValueError):
        synthesize(tree, filt, 5)  # resolution too coarse
