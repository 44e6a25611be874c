"""Built-in transcendental families and their logarithmic coordinates.

Three families are supported, all with a bounded set of singular values
and a logarithmic singularity over infinity:

* ``exp``            f(z) = lam * exp(z)
* ``sin``            f(z) = lam * sin(z)
* ``expoverlinear``  f(z) = exp(z) / (z - pole)

For a radius ``R`` beyond the singular values, every unbounded component
of f^{-1}({|w| > R}) (a *tract*) is mapped onto the punctured
neighbourhood of infinity as a universal covering, i.e. f = E o phi with
E(zeta) = R * exp(zeta) and phi a conformal map of the tract onto the
right half-plane. Fundamental domains inside a tract are indexed by the
integer ``k`` of the horizontal strip of width 2*pi that phi sends them to,
measured from the cut ray at angle ``delta_angle``.

Complex points are plain Python ``complex`` values throughout.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    BranchEscape,
    NoConvergence,
    OffDomain,
    OutsideTract,
    PoleHit,
    RadiusTooSmall,
)

TWO_PI = 2.0 * math.pi

POLE_TOL = 1e-12
NEWTON_MAX_ITER = 100
NEWTON_MAX_HALVINGS = 8
NEWTON_STEP_TOL = 1e-13
SEED_RESIDUAL_LIMIT = 1e3

# |arg(1 + v)| for Re v > 0, |v| < sqrt(2); bounds the correction term of
# the sine logarithmic coordinate.
_SIN_CORRECTION_ARG = math.atan(math.sqrt(2.0))


class Family(str, enum.Enum):
    EXP = "exp"
    SIN = "sin"
    EXP_OVER_LINEAR = "expoverlinear"


@dataclass(frozen=True)
class FunctionSpec:
    """An immutable description of one member of a built-in family."""

    family: Family
    lam: complex = 1.0 + 0.0j
    pole: complex = 0.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "pole", complex(self.pole))
        if self.family in (Family.EXP, Family.SIN) and self.lam == 0:
            raise ValueError("lambda must be nonzero")
        if not (cmath.isfinite(self.lam) and cmath.isfinite(self.pole)):
            raise ValueError("parameters must be finite")

    @classmethod
    def exp(cls, lam: complex = 1.0) -> FunctionSpec:
        return cls(Family.EXP, lam=lam)

    @classmethod
    def sin(cls, lam: complex = 1.0) -> FunctionSpec:
        return cls(Family.SIN, lam=lam)

    @classmethod
    def exp_over_linear(cls, pole: complex = 0.0) -> FunctionSpec:
        return cls(Family.EXP_OVER_LINEAR, pole=pole)

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)


class ComponentKind(str, enum.Enum):
    TRACT = "tract"
    POLE_COMPONENT = "pole_component"


@dataclass(frozen=True)
class PreimageComponentClass:
    kind: ComponentKind
    pole: complex | None = None
    order: int | None = None

    def __post_init__(self):
        if self.kind is ComponentKind.POLE_COMPONENT and (self.order is None or self.order < 1):
            raise ValueError("pole component needs an order >= 1")


class DomainId(NamedTuple):
    """Address of one fundamental domain: tract number and branch index."""

    tract: int
    k: int

    def __str__(self):
        return f"{self.tract}:{self.k}"

    @classmethod
    def parse(cls, text: str) -> DomainId:
        tract, k = text.split(":")
        return cls(int(tract), int(k))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _check_pole(spec: FunctionSpec, z: complex) -> None:
    if spec.family is Family.EXP_OVER_LINEAR and abs(z - spec.pole) <= POLE_TOL:
        raise PoleHit(f"z={z!r} is within {POLE_TOL} of the pole {spec.pole!r}")


def evaluate(spec: FunctionSpec, z: complex) -> complex:
    z = complex(z)
    _check_pole(spec, z)
    if spec.family is Family.EXP:
        return spec.lam * cmath.exp(z)
    if spec.family is Family.SIN:
        return spec.lam * cmath.sin(z)
    return cmath.exp(z) / (z - spec.pole)


def derivative(spec: FunctionSpec, z: complex) -> complex:
    z = complex(z)
    _check_pole(spec, z)
    if spec.family is Family.EXP:
        return spec.lam * cmath.exp(z)
    if spec.family is Family.SIN:
        return spec.lam * cmath.cos(z)
    d = z - spec.pole
    return cmath.exp(z) * (d - 1.0) / (d * d)


def log_abs(spec: FunctionSpec, z: complex) -> float:
    """log|f(z)| computed without overflow, for membership tests far out."""
    z = complex(z)
    if spec.family is Family.EXP:
        return math.log(abs(spec.lam)) + z.real
    if spec.family is Family.SIN:
        if abs(z.imag) < 1.0:
            s = abs(cmath.sin(z))
            return math.log(s) if s > 0 else -math.inf
        w = z if z.imag > 0 else -z
        # |sin w| = e^{Im w}/2 * |1 - e^{2iw}| for Im w > 0
        return math.log(abs(spec.lam)) + w.imag - math.log(2.0) + math.log(abs(1.0 - cmath.exp(2j * w)))
    d = abs(z - spec.pole)
    if d == 0.0:
        return math.inf
    return z.real - math.log(d)


# ---------------------------------------------------------------------------
# Singular data and component classification
# ---------------------------------------------------------------------------

def singular_values(spec: FunctionSpec) -> list[complex]:
    if spec.family is Family.EXP:
        return [0j]
    if spec.family is Family.SIN:
        return [spec.lam, -spec.lam]
    # asymptotic value 0 and critical value at the critical point pole + 1
    return [0j, cmath.exp(spec.pole + 1.0)]


def singular_radius(spec: FunctionSpec) -> float:
    """Smallest R0 with every singular value in the closed disk |w| <= R0."""
    return max(0.0, *(abs(v) for v in singular_values(spec)))


def tract_count(spec: FunctionSpec) -> int:
    return 2 if spec.family is Family.SIN else 1


def classify_preimage_components(spec: FunctionSpec, R: float) -> list[PreimageComponentClass]:
    """Components of f^{-1}({|w| > R}), as recorded analytic facts per family.

    Entire families have tracts only (one for exp, an upper and a lower one
    for sin). The meromorphic family adds one bounded component around its
    simple pole, on which f is equivalent to 1/z.
    """
    if R <= singular_radius(spec):
        raise RadiusTooSmall(f"R={R} must exceed the singular radius {singular_radius(spec)}")
    tracts = [PreimageComponentClass(ComponentKind.TRACT) for _ in range(tract_count(spec))]
    if spec.family is Family.EXP_OVER_LINEAR:
        tracts.append(PreimageComponentClass(ComponentKind.POLE_COMPONENT, pole=spec.pole, order=1))
    return tracts


def in_tract(spec: FunctionSpec, tract: int, z: complex, R: float, closed: bool = False) -> bool:
    """Whether z lies in the given tract (or its closure when ``closed``)."""
    z = complex(z)
    if not 0 <= tract < tract_count(spec):
        return False
    if spec.family is Family.EXP_OVER_LINEAR:
        # the circle |z - p| = 1 maps inside |w| <= |e^{p+1}| < R, so it
        # separates the pole component from the tract
        if abs(z - spec.pole) <= 1.0:
            return False
    elif spec.family is Family.SIN:
        if (tract == 0 and z.imag < 0) or (tract == 1 and z.imag > 0):
            return False
    lf = log_abs(spec, z)
    log_r = math.log(R)
    return lf >= log_r if closed else lf > log_r


def _tract_of(spec: FunctionSpec, z: complex, R: float) -> int | None:
    for t in range(tract_count(spec)):
        if in_tract(spec, t, z, R):
            return t
    return None


# ---------------------------------------------------------------------------
# Logarithmic coordinates
# ---------------------------------------------------------------------------

def cut_log(w: complex, R: float, delta_angle: float = math.pi) -> complex:
    """log(w/R) continuous on the plane slit along the ray at ``delta_angle``.

    The imaginary part lies in (delta_angle - 2*pi, delta_angle).
    """
    w = complex(w)
    if delta_angle == math.pi:
        rotated = -w
    else:
        rotated = w * cmath.exp(-1j * delta_angle)
    beta = cmath.phase(rotated)
    if beta <= 0.0:
        beta += TWO_PI
    return complex(math.log(abs(w) / R), delta_angle - TWO_PI + beta)


def on_cut(w: complex, delta_angle: float = math.pi) -> bool:
    w = complex(w)
    rotated = -w if delta_angle == math.pi else w * cmath.exp(-1j * delta_angle)
    return rotated.imag == 0.0 and rotated.real > 0.0


def _sin_phi_upper(z: complex, lam: complex, R: float) -> complex:
    u = cmath.sin(z)
    v = cmath.sqrt(1.0 - 1.0 / (u * u))
    return -1j * z + cmath.log(1j * lam / (2.0 * R)) + cmath.log(2.0 / (1.0 + v))


def _sin_phi_inverse_upper(zeta: complex, lam: complex, R: float) -> complex:
    # e^{iz} is the small root of t^2 - 2iut - 1 = 0 with u = R e^zeta / lam
    u = R * cmath.exp(zeta) / lam
    v = cmath.sqrt(1.0 - 1.0 / (u * u))
    return 1j * (zeta - cmath.log(1j * lam / (2.0 * R)) - cmath.log(2.0 / (1.0 + v)))


def phi(spec: FunctionSpec, tract: int, z: complex, R: float) -> complex:
    """Logarithmic coordinate of z in the given tract: R*exp(phi(z)) == f(z).

    Raises :class:`OutsideTract` when z is not in the tract, in particular
    whenever Re phi(z) would be <= 0.
    """
    z = complex(z)
    if not in_tract(spec, tract, z, R):
        raise OutsideTract(f"z={z!r} is not in tract {tract} for R={R}")
    if spec.family is Family.EXP:
        return z + cmath.log(spec.lam / R)
    if spec.family is Family.SIN:
        if tract == 0:
            return _sin_phi_upper(z, spec.lam, R)
        return _sin_phi_upper(-z, -spec.lam, R)
    return z - cmath.log(z - spec.pole) - math.log(R)


def _solve_log_equation(L: complex, pole: complex) -> complex:
    """Root of z - Log(z - pole) = L in the tract, by damped Newton.

    Seeded by the two-term asymptotic inverse L + Log(L - pole).
    """
    def g(z):
        return z - cmath.log(z - pole) - L

    z = L + cmath.log(L - pole)
    gz = g(z)
    for _ in range(NEWTON_MAX_ITER):
        dg = 1.0 - 1.0 / (z - pole)
        if dg == 0:
            break
        step = gz / dg
        t = 1.0
        for _ in range(NEWTON_MAX_HALVINGS + 1):
            trial = z - t * step
            if trial != pole:
                g_trial = g(trial)
                if abs(g_trial) <= abs(gz) or abs(t * step) < NEWTON_STEP_TOL * max(1.0, abs(z)):
                    break
            t *= 0.5
        z, gz = trial, g_trial
        if abs(t * step) < NEWTON_STEP_TOL * max(1.0, abs(z)):
            return z
    raise NoConvergence(f"Newton refinement did not converge for L={L!r}")


def phi_inverse(spec: FunctionSpec, tract: int, zeta: complex, R: float) -> complex:
    """The conformal inverse of :func:`phi`, from the right half-plane to the tract."""
    zeta = complex(zeta)
    if spec.family is Family.EXP:
        return zeta - cmath.log(spec.lam / R)
    if spec.family is Family.SIN:
        if tract == 0:
            return _sin_phi_inverse_upper(zeta, spec.lam, R)
        return -_sin_phi_inverse_upper(zeta, -spec.lam, R)
    z = _solve_log_equation(zeta + math.log(R), spec.pole)
    if not in_tract(spec, 0, z, R):
        raise BranchEscape(f"refined point {z!r} fell outside the tract")
    return z


def domain_strip(k: int, delta_angle: float = math.pi) -> tuple[float, float]:
    """Imaginary-part interval of phi over the fundamental domain with index k."""
    return delta_angle - TWO_PI + TWO_PI * k, delta_angle + TWO_PI * k


def inverse_branch(
    spec: FunctionSpec,
    domain: DomainId,
    w: complex,
    R: float,
    delta_angle: float = math.pi,
) -> complex:
    """The univalent inverse of f from the slit region {|w| > R} minus the
    cut ray onto the fundamental domain ``domain``.

    Parameters
    ----------
    spec : FunctionSpec
    domain : DomainId
        Tract number and branch index of the target domain.
    w : complex
        Point with |w| > R not on the cut ray.
    R, delta_angle : float
        Radius of the excluded disk and angle of the cut ray.

    Returns
    -------
    complex
        z in ``domain`` with f(z) = w.
    """
    w = complex(w)
    if not abs(w) > R or on_cut(w, delta_angle):
        raise OffDomain(f"w={w!r} is not in the slit region |w| > {R}")
    if not 0 <= domain.tract < tract_count(spec):
        raise OffDomain(f"tract {domain.tract} does not exist for {spec.family.value}")
    zeta = cut_log(w, R, delta_angle) + 2j * math.pi * domain.k
    if spec.family is Family.EXP:
        # written out so the modulus and argument are carried separately
        lam = spec.lam
        return complex(
            math.log(abs(w)) - math.log(abs(lam)),
            zeta.imag - cmath.phase(lam),
        )
    if spec.family is Family.EXP_OVER_LINEAR:
        L = zeta + math.log(R)
        seed = L + cmath.log(L - spec.pole)
        if seed != spec.pole:
            seed_residual = abs(evaluate(spec, seed) - w) / max(1.0, abs(w))
            if seed_residual > SEED_RESIDUAL_LIMIT:
                raise BranchEscape(f"branch index {domain.k} is outside the supported window for w={w!r}")
    return phi_inverse(spec, domain.tract, zeta, R)


def locate_domain(spec: FunctionSpec, z: complex, R: float, delta_angle: float = math.pi) -> DomainId | None:
    """The fundamental domain containing z, or None outside every tract."""
    t = _tract_of(spec, z, R)
    if t is None:
        return None
    lo, _ = domain_strip(0, delta_angle)
    k = math.floor((phi(spec, t, z, R).imag - lo) / TWO_PI)
    return DomainId(t, k)


def domain_contains(
    spec: FunctionSpec,
    domain: DomainId,
    z: complex,
    R: float,
    delta_angle: float = math.pi,
    tol: float = 1e-9,
) -> bool:
    """Membership of z in a fundamental domain, with slack ``tol`` on the
    strip edges of its logarithmic coordinate."""
    if not in_tract(spec, domain.tract, z, R):
        return False
    lo, hi = domain_strip(domain.k, delta_angle)
    y = phi(spec, domain.tract, z, R).imag
    return lo - tol < y < hi + tol
