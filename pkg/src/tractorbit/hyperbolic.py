"""Hyperbolic metric of the right half-plane and the far-field contraction bound.

The density is normalised as lambda(z) = 1 / (2 Re z), so distances are
half the usual curvature -1 values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OutsideHalfPlane


@dataclass(frozen=True)
class KappaEstimate:
    """Certified contraction factor ``bound`` valid where Re phi >= ``validity_threshold``."""

    bound: float
    validity_threshold: float

    def __post_init__(self):
        if not 0.0 < self.bound < 1.0:
            raise ValueError("bound must lie in (0, 1)")
        if self.validity_threshold < math.pi / self.bound * (1 - 1e-15):
            raise ValueError("validity_threshold must be at least pi / bound")

    def applies(self, re_phi: float) -> bool:
        return re_phi >= self.validity_threshold


def _require_right(z: complex) -> None:
    if not complex(z).real > 0:
        raise OutsideHalfPlane(f"{z!r} is not in the right half-plane")


def density_halfplane(z: complex) -> float:
    _require_right(z)
    return 1.0 / (2.0 * complex(z).real)


def distance_halfplane(z: complex, w: complex) -> float:
    """Distance for the density 1/(2 Re z): (1/2) arccosh(1 + |z-w|^2 / (2 Re z Re w))."""
    z, w = complex(z), complex(w)
    _require_right(z)
    _require_right(w)
    if z == w:
        return 0.0
    # arccosh(1 + x) = 2 asinh(sqrt(x/2)), which stays accurate for small x
    x = abs(z - w) ** 2 / (2.0 * z.real * w.real)
    return math.asinh(math.sqrt(x / 2.0))


def density_lower_bound(dist_to_boundary: float) -> float:
    """Lower bound 1/(2d) for the density of a simply connected domain at a
    point whose Euclidean distance to the boundary is d.

    This is the Koebe-type estimate in the curvature -1 convention; in the
    half-density convention of :func:`density_halfplane` the guaranteed
    bound is 1/(4d).
    """
    if not dist_to_boundary > 0:
        raise ValueError("distance to boundary must be positive")
    return 1.0 / (2.0 * dist_to_boundary)


def contraction_ratio_bound(re_phi: float) -> float:
    """Far-field bound pi / Re phi on lambda_T / lambda_F. Values >= 1 certify nothing."""
    if not re_phi > 0:
        raise ValueError("re_phi must be positive")
    return math.pi / re_phi


def kappa_for_threshold(target_kappa: float) -> KappaEstimate:
    if not 0.0 < target_kappa < 1.0:
        raise ValueError("target_kappa must lie in (0, 1)")
    return KappaEstimate(bound=target_kappa, validity_threshold=math.pi / target_kappa)
