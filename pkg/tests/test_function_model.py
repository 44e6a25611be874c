import cmath
import math

import numpy as np
import pytest
from scipy import ndimage, optimize

from tractorbit import function_model as fm
from tractorbit.errors import OffDomain, OutsideTract, PoleHit, RadiusTooSmall
from tractorbit.function_model import ComponentKind, DomainId, Family, FunctionSpec
from tractorbit.partition import build_partition, domain_window

from conftest import ALL_SPECS, EOL_K3_W100, random_slit_points


def test_spec_validation():
    with pytest.raises(ValueError):
        FunctionSpec.exp(0)
    with pytest.raises(ValueError):
        FunctionSpec.sin(0j)
    assert FunctionSpec("sin", lam=2).family is Family.SIN


@pytest.mark.parametrize("spec, z, expected", [
    (FunctionSpec.exp(1), 0, 1),
    (FunctionSpec.sin(2), math.pi / 2, 2),
    (FunctionSpec.exp_over_linear(0), 1, math.e),
])
def test_eval_examples(spec, z, expected):
    assert fm.evaluate(spec, z) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("spec, z, expected", [
    (FunctionSpec.exp(1), 0, 1),
    (FunctionSpec.exp_over_linear(0), 1, 0),
    (FunctionSpec.sin(1), 0, 1),
])
def test_deriv_examples(spec, z, expected):
    assert fm.derivative(spec, z) == pytest.approx(expected, abs=1e-15)


def test_pole_hit():
    spec = FunctionSpec.exp_over_linear(1 + 1j)
    with pytest.raises(PoleHit):
        fm.evaluate(spec, 1 + 1j)
    with pytest.raises(PoleHit):
        fm.derivative(spec, 1 + 1j + 1e-13)


@pytest.mark.parametrize("spec", [s for s, _ in ALL_SPECS], ids=lambda s: f"{s.family.value}")
def test_deriv_matches_central_difference(spec, rng):
    h = 1e-6
    checked = 0
    while checked < 100:
        z = complex(*rng.uniform(-7, 7, 2))
        if abs(z) > 10 or abs(z - spec.pole) < 0.1:
            continue
        fd = (fm.evaluate(spec, z + h) - fm.evaluate(spec, z - h)) / (2 * h)
        d = fm.derivative(spec, z)
        assert abs(fd - d) <= 1e-5 * max(1.0, abs(d))
        checked += 1


def test_singular_radius_examples():
    assert fm.singular_radius(FunctionSpec.exp(1)) == 0.0
    assert fm.singular_radius(FunctionSpec.sin(3j)) == pytest.approx(3.0)
    assert fm.singular_radius(FunctionSpec.exp_over_linear(0)) == pytest.approx(math.e)


def test_exp_over_linear_critical_value_by_minimising_derivative():
    def abs_fprime(v):
        z = complex(*v)
        return abs(cmath.exp(z) * (z - 1) / z ** 2)

    res = optimize.minimize(abs_fprime, [1.4, 0.3], method="Nelder-Mead",
                            options=dict(xatol=1e-12, fatol=1e-16))
    crit = complex(*res.x)
    assert abs(crit - 1) < 1e-6
    assert fm.singular_radius(FunctionSpec.exp_over_linear(0)) == pytest.approx(
        abs(fm.evaluate(FunctionSpec.exp_over_linear(0), crit)), rel=1e-9)


def test_classify_examples():
    kinds = lambda comps: [c.kind for c in comps]
    assert kinds(fm.classify_preimage_components(FunctionSpec.exp(1), 4)) == [ComponentKind.TRACT]
    eol = fm.classify_preimage_components(FunctionSpec.exp_over_linear(0), 10)
    assert kinds(eol) == [ComponentKind.TRACT, ComponentKind.POLE_COMPONENT]
    assert eol[1].pole == 0 and eol[1].order == 1
    assert kinds(fm.classify_preimage_components(FunctionSpec.sin(1), 2)) == [ComponentKind.TRACT] * 2
    with pytest.raises(RadiusTooSmall):
        fm.classify_preimage_components(FunctionSpec.sin(1), 1.0)


def test_sin_preimage_has_two_unbounded_components_on_a_grid():
    x = np.linspace(-12, 12, 601)
    y = np.linspace(-6, 6, 601)
    Z = x[None, :] + 1j * y[:, None]
    labels, count = ndimage.label(np.abs(np.sin(Z)) > 2.0)
    assert count == 2
    # one touches the top edge, the other the bottom edge
    assert {labels[0, 0], labels[-1, 0]} == {1, 2}


@pytest.mark.parametrize("spec, R", ALL_SPECS)
def test_classification_stable_under_doubling_radius(spec, R):
    assert fm.classify_preimage_components(spec, R) == fm.classify_preimage_components(spec, 2 * R)


def test_phi_examples():
    exp = FunctionSpec.exp(1)
    assert fm.phi(exp, 0, 5, 1.0) == pytest.approx(5)
    assert fm.phi(exp, 0, 5 + 2j * math.pi, math.e) == pytest.approx(4 + 2j * math.pi)
    with pytest.raises(OutsideTract):
        fm.phi(exp, 0, -1.0, 1.0)


def test_phi_exp_over_linear_real_part_three():
    # oracle: Newton on e^z - w z = 0 for w = R e^3, not the library inverse
    spec, R = FunctionSpec.exp_over_linear(0), 10.0
    w = R * math.exp(3)
    L = cmath.log(w) + 2j * math.pi
    z = L + cmath.log(L)
    for _ in range(50):
        z -= (cmath.exp(z) - w * z) / (cmath.exp(z) - w)
    zeta = fm.phi(spec, 0, z, R)
    assert zeta.real == pytest.approx(3.0, abs=1e-12)
    assert abs(R * cmath.exp(zeta) - fm.evaluate(spec, z)) <= 1e-12 * abs(w)


@pytest.mark.parametrize("spec, R", ALL_SPECS)
def test_conjugacy_E_of_phi_equals_f(spec, R, rng):
    part = build_partition(spec, R)
    window = domain_window(part, 3)
    for w in random_slit_points(rng, part, 50, 1e3):
        d = window[rng.integers(len(window))]
        z = part.inverse_branch(d, w)
        assert abs(R * cmath.exp(part.phi(d.tract, z)) - fm.evaluate(spec, z)) <= 1e-12 * abs(w)


def test_inverse_branch_examples():
    exp = FunctionSpec.exp(1)
    assert fm.inverse_branch(exp, DomainId(0, 0), math.exp(2), 1.0) == pytest.approx(2, abs=1e-15)
    assert fm.inverse_branch(exp, DomainId(0, 1), math.e, 1.0) == pytest.approx(1 + 2j * math.pi, abs=1e-15)
    z = fm.inverse_branch(FunctionSpec.exp_over_linear(0), DomainId(0, 3), 100, 10.0)
    assert abs(z - EOL_K3_W100) < 1e-10
    assert abs(cmath.exp(z) / z - 100) <= 1e-10
    assert abs(z.imag - 6 * math.pi) < math.pi / 2


def test_inverse_branch_off_domain():
    exp = FunctionSpec.exp(1)
    with pytest.raises(OffDomain):
        fm.inverse_branch(exp, DomainId(0, 1), 0.5, 1.0)
    with pytest.raises(OffDomain):
        fm.inverse_branch(exp, DomainId(0, 1), -3.0, 1.0)  # on the cut ray
    with pytest.raises(OffDomain):
        fm.inverse_branch(exp, DomainId(1, 1), 3.0, 1.0)


@pytest.mark.parametrize("spec, R", ALL_SPECS)
def test_inverse_branch_lands_in_its_domain(spec, R, rng):
    part = build_partition(spec, R)
    window = domain_window(part, 4)
    for w in random_slit_points(rng, part, 100):
        d = window[rng.integers(len(window))]
        z = part.inverse_branch(d, w)
        assert part.locate(z) == d
        assert abs(z) > R  # certified domains miss the disk


@pytest.mark.parametrize("spec, R", ALL_SPECS)
def test_branch_coherence_along_segments(spec, R, rng):
    part = build_partition(spec, R)
    window = domain_window(part, 3)
    a, b = random_slit_points(rng, part, 2, 50.0)
    # straight in cut-log coordinates, whose range is a convex half-strip
    za, zb = fm.cut_log(a, R, part.delta_angle), fm.cut_log(b, R, part.delta_angle)
    path = [R * cmath.exp(za + (zb - za) * t) for t in np.linspace(0, 1, 400)]
    assert all(part.in_slit_region(w) for w in path)
    for d in window:
        images = [part.inverse_branch(d, w) for w in path]
        assert all(part.contains(d, z) for z in images)
        jumps = [abs(z1 - z0) for z0, z1 in zip(images, images[1:])]
        assert max(jumps) < 0.5
