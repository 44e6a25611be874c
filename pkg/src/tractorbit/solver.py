"""Periodic points with a prescribed itinerary.

For an itinerary F_1 ... F_n of fundamental domains the composition
psi_s = psi_{F_1} o ... o psi_{F_n} of univalent inverse branches maps the
slit region into F_1 and contracts its hyperbolic metric, so iterating it
converges to the unique point of F_1 whose forward orbit follows the
itinerary. That point is repelling for f^n.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import function_model as fm
from .errors import (
    BranchEscape,
    DerivativeSingular,
    IntermediateOffDomain,
    InvalidItinerary,
    NoConvergence,
    NotRepelling,
)
from .function_model import DomainId, FunctionSpec
from .hyperbolic import distance_halfplane
from .partition import PartitionSpec, domain_avoids_disk

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200
MEMBERSHIP_TOL = 1e-9


@dataclass(frozen=True)
class Itinerary:
    domains: tuple[DomainId, ...]

    def __post_init__(self):
        domains = tuple(DomainId(*d) for d in self.domains)
        if not domains:
            raise ValueError("an itinerary needs at least one domain")
        object.__setattr__(self, "domains", domains)

    @classmethod
    def of(cls, *ks: int, tract: int = 0) -> Itinerary:
        """Itinerary through branches ``ks`` of a single tract."""
        return cls(tuple(DomainId(tract, k) for k in ks))

    @classmethod
    def parse(cls, text: str) -> Itinerary:
        return cls(tuple(DomainId.parse(tok) for tok in text.split()))

    def __len__(self):
        return len(self.domains)

    def __iter__(self):
        return iter(self.domains)

    def __getitem__(self, i):
        return self.domains[i]

    def __str__(self):
        return " ".join(str(d) for d in self.domains)

    @property
    def period(self) -> int:
        return len(self.domains)

    def shift(self, m: int = 1) -> Itinerary:
        m %= len(self.domains)
        return Itinerary(self.domains[m:] + self.domains[:m])

    def repeat(self, times: int) -> Itinerary:
        return Itinerary(self.domains * times)

    def sort_key(self) -> tuple:
        return (len(self.domains), self.domains)


@dataclass(frozen=True)
class PeriodicPointResult:
    itinerary: Itinerary
    point: complex
    orbit: tuple[complex, ...]
    multiplier: complex
    multiplier_modulus: float
    residual: float
    iterations: int
    step_ratios: tuple[float, ...]
    iterates: tuple[complex, ...] = ()

    @property
    def period(self) -> int:
        return len(self.orbit)


def is_proper_power(s: Itinerary | Sequence[DomainId]) -> bool:
    """True iff the itinerary is some shorter itinerary repeated at least twice.

    A word is a proper power exactly when it coincides with one of its
    nontrivial rotations.
    """
    d = tuple(s)
    n = len(d)
    return any(d[r:] + d[:r] == d for r in range(1, n))


def psi_s(part: PartitionSpec, s: Itinerary, w: complex) -> complex:
    """Apply the inverse branches of ``s`` right to left, starting from w."""
    z = complex(w)
    for i in range(len(s) - 1, -1, -1):
        if i < len(s) - 1 and not part.in_slit_region(z):
            raise IntermediateOffDomain(
                f"intermediate image {z!r} for domain {s[i + 1]} left the slit region"
            )
        z = part.inverse_branch(s[i], z)
    return z


def multiplier(spec: FunctionSpec, orbit: Iterable[complex]) -> complex:
    """(f^n)'(orbit[0]) as the chain-rule product of f' along the orbit."""
    m = 1.0 + 0j
    for z in orbit:
        m *= fm.derivative(spec, z)
    return m


def default_seed(part: PartitionSpec) -> complex:
    return 2.0 * part.R * cmath.exp(1j * (part.delta_angle + math.pi))


def solve_periodic(
    part: PartitionSpec,
    s: Itinerary,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: complex | None = None,
) -> PeriodicPointResult:
    """Find the repelling periodic point with itinerary ``s`` by Banach iteration of psi_s.

    Parameters
    ----------
    part : PartitionSpec
    s : Itinerary
        Every domain must be certified by :func:`domain_avoids_disk`.
    tol : float
        Stop when the Euclidean step |z_{m+1} - z_m| is at most ``tol``.
    max_iter : int
        Cap on applications of psi_s after the first landing in F_1.
    seed : complex, optional
        Starting point in the slit region; defaults to 2R on the side
        opposite the cut.

    Returns
    -------
    PeriodicPointResult
    """
    if tol < 1e-14:
        raise ValueError("tol must be >= 1e-14")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    for d in s:
        if not domain_avoids_disk(part, d):
            raise InvalidItinerary(f"domain {d} is not certified to avoid the disk |z| <= {part.R}")

    spec = part.function
    z = psi_s(part, s, default_seed(part) if seed is None else seed)
    iterates = [z]
    steps: list[float] = []
    for _ in range(max_iter):
        z_next = psi_s(part, s, z)
        steps.append(abs(z_next - z))
        iterates.append(z_next)
        z = z_next
        if steps[-1] <= tol:
            break
    else:
        raise NoConvergence(f"itinerary {s} did not converge in {max_iter} iterations (last step {steps[-1]:.3g})")

    orbit = [z]
    for _ in range(len(s) - 1):
        orbit.append(fm.evaluate(spec, orbit[-1]))
    residual = abs(fm.evaluate(spec, orbit[-1]) - z)

    for i, (d, x) in enumerate(zip(s, orbit)):
        if not part.contains(d, x, tol=MEMBERSHIP_TOL):
            raise BranchEscape(f"orbit point {i} = {x!r} is not in domain {d}")

    mult = multiplier(spec, orbit)
    if not abs(mult) > 1.0:
        raise NotRepelling(f"|multiplier| = {abs(mult):.6g} <= 1 for itinerary {s}")
    if residual > 10.0 * tol * max(1.0, abs(z)):
        raise NoConvergence(f"residual {residual:.3g} exceeds tolerance for itinerary {s}")

    ratios = tuple(b / a for a, b in zip(steps, steps[1:]) if a > 0)
    return PeriodicPointResult(
        itinerary=s,
        point=z,
        orbit=tuple(orbit),
        multiplier=mult,
        multiplier_modulus=abs(mult),
        residual=residual,
        iterations=len(steps),
        step_ratios=ratios,
        iterates=tuple(iterates),
    )


def hyperbolic_step_ratios(part: PartitionSpec, result: PeriodicPointResult) -> list[tuple[float, float, float]]:
    """Consecutive step ratios measured in logarithmic coordinates.

    For each m returns (Re phi(z_m), Re phi(z_{m+1}), ratio) where ratio is
    d(phi z_{m+1}, phi z_{m+2}) / d(phi z_m, phi z_{m+1}) in the half-plane.
    """
    tract = result.itinerary[0].tract
    zetas = [part.phi(tract, z) for z in result.iterates]
    out = []
    for m in range(len(zetas) - 2):
        d0 = distance_halfplane(zetas[m], zetas[m + 1])
        d1 = distance_halfplane(zetas[m + 1], zetas[m + 2])
        if d0 > 0:
            out.append((zetas[m].real, zetas[m + 1].real, d1 / d0))
    return out


def newton_refine(
    spec: FunctionSpec,
    n: int,
    z0: complex,
    tol: float = DEFAULT_TOL,
    max_iter: int = 100,
) -> complex:
    """Newton's method on g(z) = f^n(z) - z; an oracle independent of the inverse branches."""
    if n < 1:
        raise ValueError("n must be >= 1")
    z = complex(z0)
    for _ in range(max_iter):
        x, dfn = z, 1.0 + 0j
        for _ in range(n):
            dfn *= fm.derivative(spec, x)
            x = fm.evaluate(spec, x)
        g, dg = x - z, dfn - 1.0
        if abs(dg) < 1e-14:
            raise DerivativeSingular(f"|g'| = {abs(dg):.3g} at z={z!r}")
        step = g / dg
        z -= step
        if abs(step) <= tol * max(1.0, abs(z)):
            return z
    raise NoConvergence(f"Newton on f^{n}(z) - z did not converge from {z0!r}")
