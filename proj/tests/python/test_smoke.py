import json

import numpy as np
import pytest
from scipy import special

import rsur


def test_dawson_matches_scipy():
    w = np.linspace(-30.0, 30.0, 2001)
    np.testing.assert_allclose(rsur.dawson(w), special.dawsn(w), rtol=1e-13, atol=1e-300)


def test_erfi_matches_scipy():
    w = np.linspace(-5.0, 5.0, 101)
    np.testing.assert_allclose(rsur.erfi(w), special.erfi(w), rtol=1e-13)


def test_erfi_overflow_raises():
    with pytest.raises(rsur.Error):
        rsur.erfi(30.0)


def test_simplest_field_is_a_gaussian_swirl():
    rng = np.random.default_rng(7)
    r = rng.normal(size=(50, 3))
    c = 0.6 - 0.8j
    f = rsur.simplest_field(r, c, 1.0)
    g = c * np.exp(-0.5 * np.sum(r**2, axis=1))
    swirl = np.stack([r[:, 1] * g, -r[:, 0] * g], axis=1)
    ratio = f[:, :2] / swirl
    np.testing.assert_allclose(ratio, ratio[0, 0], rtol=1e-10)
    np.testing.assert_allclose(f[:, 2], 0.0, atol=1e-14 * np.max(np.abs(f)))


def test_saturating_field_shape_and_spec_validation():
    spec = rsur.SaturatingFieldSpec(1.0, 0.8 + 0.3j, -0.4 + 0.5j)
    f = rsur.saturating_field(np.zeros((4, 3)) + 0.3, 0.5, spec)
    assert f.shape == (4, 3) and f.dtype == np.complex128
    with pytest.raises(ValueError):
        rsur.SaturatingFieldSpec(-1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        rsur.saturating_field(np.zeros((4, 2)), 0.0, spec)


def test_saturating_spec_reaches_the_bound():
    spec = rsur.SaturatingFieldSpec(1.5, 0.8 + 0.3j, -0.4 + 0.5j)
    report = rsur.uncertainty_product(spec)
    assert report["product"] == pytest.approx(rsur.ELECTROMAGNETIC_BOUND, rel=1e-6)
    assert report["saturation_ratio"] == pytest.approx(1.0, abs=1e-6)


def test_radial_spectrum_against_closed_form():
    s = rsur.radial_spectrum(10.0, 2000, 3)
    for n, value in enumerate(s["eigenvalues"]):
        assert value == pytest.approx(rsur.analytic_eigenvalue(n), rel=1e-5)
    assert len(s["eigenfunctions"]) == 3
    assert s["eigenfunctions"][0].shape == s["kappa"].shape


def test_massless_bound():
    assert rsur.massless_bound(1.0) == pytest.approx(2.5)
    assert rsur.massless_bound(0.0) == pytest.approx(1.5)


def test_spreading_is_quadratic():
    spec = rsur.simplest_spec(1.0, 1.0)
    times = [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0]
    tr = rsur.spreading(spec, times)
    t = np.asarray(times)
    fit = tr["alpha"] + tr["beta"] * t + tr["gamma"] * t**2
    np.testing.assert_allclose(tr["second_moments"], fit, rtol=1e-10)
    assert tr["gamma"] > 0.0


def test_cli_round_trip():
    code, out, _ = rsur.run(["spectrum", "--points", "400", "--states", "2"])
    assert code == 0
    assert len(json.loads(out)["eigenvalues"]) == 2
    code, _, err = rsur.run(["verify-bound", "--path", "grid", "--grid", "48"])
    assert code == 2
    assert err
