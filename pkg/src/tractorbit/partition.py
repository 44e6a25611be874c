"""The geometric stage: the region outside a closed disk, a cut ray, and the
fundamental domains into which the preimages of the ray slice each tract."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import function_model as fm
from .errors import DeltaMeetsTract, EmptyWindow, RadiusTooSmall
from .function_model import DomainId, Family, FunctionSpec

R_MIN = 1.0
DELTA_SAMPLES = 256
DELTA_REACH = 1e6


@dataclass(frozen=True)
class TractDescriptor:
    index: int
    base_point: complex
    base_phi: complex
    description: str


@dataclass(frozen=True)
class PartitionSpec:
    function: FunctionSpec
    R: float
    delta_angle: float
    tracts: tuple[TractDescriptor, ...]
    components: tuple[fm.PreimageComponentClass, ...] = field(default=())

    def inverse_branch(self, domain: DomainId, w: complex) -> complex:
        return fm.inverse_branch(self.function, domain, w, self.R, self.delta_angle)

    def phi(self, tract: int, z: complex) -> complex:
        return fm.phi(self.function, tract, z, self.R)

    def locate(self, z: complex) -> DomainId | None:
        return fm.locate_domain(self.function, z, self.R, self.delta_angle)

    def contains(self, domain: DomainId, z: complex, tol: float = 1e-9) -> bool:
        return fm.domain_contains(self.function, domain, z, self.R, self.delta_angle, tol)

    def in_slit_region(self, w: complex) -> bool:
        return abs(w) > self.R and not fm.on_cut(w, self.delta_angle)


def _describe(spec: FunctionSpec, tract: int) -> str:
    if spec.family is Family.EXP:
        return "Re z > log(R/|lam|); domain k is the strip Im z + arg(lam) in (theta - 2pi + 2pi k, theta + 2pi k)"
    if spec.family is Family.SIN:
        side = "upper: Im z > 0" if tract == 0 else "lower: Im z < 0"
        return f"{side}, |lam sin z| > R; domain k is where Im phi lies in (theta - 2pi + 2pi k, theta + 2pi k)"
    return "|z - pole| > 1, |exp(z)/(z - pole)| > R; domain k via phi(z) = z - Log(z - pole) - log R"


def build_partition(
    spec: FunctionSpec,
    R: float,
    delta_angle: float = math.pi,
    r_min: float = R_MIN,
) -> PartitionSpec:
    """Validate (R, delta_angle) for ``spec`` and describe its tracts.

    The cut ray {t e^{i delta_angle} : t >= R} is sampled at
    ``DELTA_SAMPLES`` geometrically spaced points out to ``DELTA_REACH``
    and must miss the closure of every tract.
    """
    R = float(R)
    if not (R > fm.singular_radius(spec) and R >= r_min):
        raise RadiusTooSmall(
            f"R={R} must exceed the singular radius {fm.singular_radius(spec):.6g} and be at least {r_min}"
        )
    delta_angle = math.fmod(float(delta_angle), fm.TWO_PI)
    if delta_angle < 0:
        delta_angle += fm.TWO_PI

    direction = complex(math.cos(delta_angle), math.sin(delta_angle)) if delta_angle != math.pi else -1.0 + 0j
    for t in np.geomspace(R, max(DELTA_REACH, 2.0 * R), DELTA_SAMPLES):
        z = float(t) * direction
        for tract in range(fm.tract_count(spec)):
            if fm.in_tract(spec, tract, z, R, closed=True):
                raise DeltaMeetsTract(
                    f"cut ray at angle {delta_angle:.6g} enters tract {tract} at z={z!r}"
                )

    descriptors = []
    base_zeta = complex(1.0, delta_angle - math.pi)
    for tract in range(fm.tract_count(spec)):
        base = fm.phi_inverse(spec, tract, base_zeta, R)
        descriptors.append(TractDescriptor(tract, base, base_zeta, _describe(spec, tract)))
    return PartitionSpec(
        function=spec,
        R=R,
        delta_angle=delta_angle,
        tracts=tuple(descriptors),
        components=tuple(fm.classify_preimage_components(spec, R)),
    )


def _interval_distance(lo: float, hi: float) -> float:
    if lo <= 0.0 <= hi:
        return 0.0
    return min(abs(lo), abs(hi))


def domain_min_modulus(part: PartitionSpec, domain: DomainId) -> float:
    """A lower bound for |z| over the closure of a fundamental domain."""
    spec, R = part.function, part.R
    lo, hi = fm.domain_strip(domain.k, part.delta_angle)
    if spec.family is Family.EXP:
        shift = math.atan2(spec.lam.imag, spec.lam.real)
        x0 = max(0.0, math.log(R / abs(spec.lam)))
        return math.hypot(x0, _interval_distance(lo - shift, hi - shift))
    if spec.family is Family.SIN:
        # z = i(zeta - A - B) with |Im B| < atan(sqrt 2) and Im z > asinh(sqrt(r^2 - 1))
        lam = spec.lam if domain.tract == 0 else -spec.lam
        im_a = math.atan2((1j * lam).imag, (1j * lam).real)
        c = fm._SIN_CORRECTION_ARG
        x_lo, x_hi = -hi + im_a - c, -lo + im_a + c
        r = R / abs(lam)
        y0 = math.asinh(math.sqrt(r * r - 1.0))
        return math.hypot(_interval_distance(x_lo, x_hi), y0)
    # Im z = Im zeta + arg(z - p), and Re z > log R + log|z - p| with |z - p| > 1
    p = spec.pole
    a, b = lo - p.imag, hi - p.imag
    if a >= math.pi:
        y_lo, y_hi = a, b + math.pi
    elif b <= -math.pi:
        y_lo, y_hi = a - math.pi, b
    else:
        y_lo, y_hi = a - math.pi, b + math.pi
    sep = max(1.0, _interval_distance(y_lo, y_hi))
    x0 = max(0.0, math.log(R) + math.log(sep))
    return math.hypot(x0, _interval_distance(y_lo + p.imag, y_hi + p.imag))


def domain_avoids_disk(part: PartitionSpec, domain: DomainId) -> bool:
    """True when the domain is certified to miss the closed disk |z| <= R.

    False means "not certified", not "certainly intersects".
    """
    if not 0 <= domain.tract < len(part.tracts):
        return False
    return domain_min_modulus(part, domain) > part.R


def domain_window(part: PartitionSpec, K: int) -> list[DomainId]:
    """Certified domains with |k| <= K across all tracts, ordered by (tract, k)."""
    if K < 1:
        raise ValueError("K must be >= 1")
    window = [
        DomainId(t.index, k)
        for t in part.tracts
        for k in range(-K, K + 1)
        if domain_avoids_disk(part, DomainId(t.index, k))
    ]
    if not window:
        raise EmptyWindow(f"no certified fundamental domain with |k| <= {K} for R={part.R}")
    return window
