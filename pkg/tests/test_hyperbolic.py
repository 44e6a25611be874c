import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, optimize

from tractorbit import hyperbolic as hb
from tractorbit.errors import OutsideHalfPlane

right = st.builds(
    complex,
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=-1e3, max_value=1e3),
)


def path_length(points):
    """Length of a polyline for the density 1/(2 Re z), by quadrature per segment."""
    total = 0.0
    for a, b in zip(points, points[1:]):
        seg = lambda t: abs(b - a) / (2.0 * (a + (b - a) * t).real)
        total += integrate.quad(seg, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13)[0]
    return total


def geodesic_length(z, w):
    """Integrate the density along the circular arc centred on the imaginary axis."""
    # centre ic equidistant from z and w
    c = (abs(w) ** 2 - abs(z) ** 2) / (2.0 * (w.imag - z.imag))
    r = abs(z - 1j * c)
    t0 = math.atan2(z.imag - c, z.real)
    t1 = math.atan2(w.imag - c, w.real)
    # on the arc |dz| = r dt and Re z = r cos t
    return integrate.quad(lambda t: r / (2.0 * r * math.cos(t)), min(t0, t1), max(t0, t1),
                          epsabs=1e-14, epsrel=1e-13)[0]


@pytest.mark.parametrize("z, expected", [(1, 0.5), (3 + 1j, 1 / 6), (0.5, 1.0)])
def test_density_examples(z, expected):
    assert hb.density_halfplane(z) == pytest.approx(expected)


def test_density_rejects_left_half():
    with pytest.raises(OutsideHalfPlane):
        hb.density_halfplane(-1 + 2j)
    with pytest.raises(OutsideHalfPlane):
        hb.distance_halfplane(0j, 1)


def test_distance_identical_points():
    assert hb.distance_halfplane(1, 1) == 0.0


def test_distance_along_real_axis_matches_integrated_density():
    oracle = integrate.quad(lambda x: 1.0 / (2.0 * x), 1.0, 3.0, epsabs=1e-15)[0]
    assert oracle == pytest.approx(0.5 * math.log(3), rel=1e-13)
    assert hb.distance_halfplane(1, 3) == pytest.approx(oracle, abs=1e-12)


def test_distance_off_axis_matches_geodesic_quadrature():
    oracle = geodesic_length(1 + 0j, 1 + 1j)
    assert hb.distance_halfplane(1, 1 + 1j) == pytest.approx(oracle, abs=1e-8)


def test_polyline_minimisation_does_not_beat_closed_form():
    z, w = 1 + 0j, 1 + 1j

    def length(params):
        pts = [z] + [complex(params[2 * i], params[2 * i + 1]) for i in range(len(params) // 2)] + [w]
        if any(p.real <= 0 for p in pts):
            return 1e9
        return path_length(pts)

    ts = np.linspace(0, 1, 9)[1:-1]
    guess = np.ravel([[1.0 + 0.1 * math.sin(math.pi * t), t] for t in ts])
    best = optimize.minimize(length, guess, method="BFGS")
    d = hb.distance_halfplane(z, w)
    assert best.fun >= d - 1e-10
    assert best.fun - d < 1e-3


@settings(max_examples=300, deadline=None)
@given(right, right)
def test_distance_symmetric_and_positive(z, w):
    d = hb.distance_halfplane(z, w)
    assert d == hb.distance_halfplane(w, z)
    assert (d == 0) == (z == w)


def test_triangle_inequality_random_triples(rng):
    pts = lambda n: rng.uniform(0.01, 10, n) + 1j * rng.uniform(-10, 10, n)
    for a, b, c in zip(pts(1000), pts(1000), pts(1000)):
        assert hb.distance_halfplane(a, c) <= hb.distance_halfplane(a, b) + hb.distance_halfplane(b, c) + 1e-10


@settings(max_examples=300, deadline=None)
@given(right, right, st.floats(-100, 100), st.floats(1e-2, 1e2))
def test_distance_invariant_under_isometries(z, w, t, s):
    d = hb.distance_halfplane(z, w)
    assert hb.distance_halfplane(z + 1j * t, w + 1j * t) == pytest.approx(d, abs=1e-10, rel=1e-9)
    assert hb.distance_halfplane(s * z, s * w) == pytest.approx(d, abs=1e-10, rel=1e-9)


@pytest.mark.parametrize("d, expected", [(math.pi, 1 / (2 * math.pi)), (1, 0.5), (0.5, 1.0)])
def test_density_lower_bound_examples(d, expected):
    assert hb.density_lower_bound(d) == pytest.approx(expected)


@pytest.mark.parametrize("re_phi, expected", [(10 * math.pi, 0.1), (math.pi, 1.0), (2 * math.pi, 0.5)])
def test_contraction_ratio_bound_examples(re_phi, expected):
    assert hb.contraction_ratio_bound(re_phi) == pytest.approx(expected)


@settings(max_examples=200, deadline=None)
@given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6))
def test_contraction_ratio_bound_monotone(a, b):
    if a < b:
        assert hb.contraction_ratio_bound(a) >= hb.contraction_ratio_bound(b)


@pytest.mark.parametrize("kappa, threshold", [(0.5, 2 * math.pi), (0.1, 10 * math.pi), (0.99, math.pi / 0.99)])
def test_kappa_for_threshold(kappa, threshold):
    est = hb.kappa_for_threshold(kappa)
    assert est.bound == kappa
    assert est.validity_threshold == pytest.approx(threshold)
    assert est.applies(threshold) and not est.applies(threshold * 0.99)


def test_kappa_estimate_invariants():
    with pytest.raises(ValueError):
        hb.kappa_for_threshold(1.0)
    with pytest.raises(ValueError):
        hb.KappaEstimate(bound=0.5, validity_threshold=1.0)


def test_half_strip_density_ratio_respects_far_field_bound():
    # lambda_H / lambda_strip along the centre line of a half-strip of height 2 pi,
    # with the strip density computed from the explicit map onto the half-plane
    for x in np.linspace(2 * math.pi, 60, 25):
        # zeta -> sinh(zeta / 2) sends {Re > 0, |Im| < pi} onto the right half-plane
        z = complex(x, 0.3)
        g = math.sinh(x / 2) * math.cos(0.15) + 1j * math.cosh(x / 2) * math.sin(0.15)
        dg = abs(0.5 * np.cosh(z / 2))
        lam_strip = dg / (2.0 * g.real)
        assert hb.density_halfplane(z) / lam_strip <= hb.contraction_ratio_bound(x)
