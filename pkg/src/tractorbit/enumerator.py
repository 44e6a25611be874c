"""Batch enumeration of periodic points over a window of fundamental domains."""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import TractorbitError
from .function_model import DomainId
from .partition import PartitionSpec
from .solver import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    Itinerary,
    PeriodicPointResult,
    is_proper_power,
    solve_periodic,
)

# errors that mark one itinerary as failed instead of aborting the batch
RECORDED_ERRORS = (TractorbitError, ArithmeticError, ValueError)


@dataclass(frozen=True)
class BatchFailure:
    itinerary: Itinerary
    error: str
    message: str


@dataclass
class BatchReport:
    window: list[DomainId]
    period: int | None
    results: list[PeriodicPointResult] = field(default_factory=list)
    failures: list[BatchFailure] = field(default_factory=list)
    min_pairwise_distance: float = math.inf
    minimal_count: int = 0


def generate_itineraries(window: list[DomainId], n: int, minimal_only: bool = False) -> list[Itinerary]:
    """All length-n itineraries over ``window`` in lexicographic order of window
    positions; with ``minimal_only`` the proper powers are dropped."""
    if not window:
        raise ValueError("window must be nonempty")
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for word in itertools.product(window, repeat=n):
        if minimal_only and is_proper_power(word):
            continue
        out.append(Itinerary(word))
    return out


def _solve_one(job):
    part, s, tol, max_iter = job
    try:
        return s, solve_periodic(part, s, tol=tol, max_iter=max_iter), None
    except RECORDED_ERRORS as exc:
        return s, None, BatchFailure(s, type(exc).__name__, str(exc))


def min_pairwise_distance(points) -> float:
    pts = np.asarray(points, dtype=complex)
    if pts.size < 2:
        return math.inf
    d = np.abs(pts[:, None] - pts[None, :])
    d[np.diag_indices_from(d)] = np.inf
    return float(d.min())


def batch_solve(
    part: PartitionSpec,
    itineraries: list[Itinerary],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    workers: int = 1,
    window: list[DomainId] | None = None,
) -> BatchReport:
    """Solve every itinerary and aggregate the outcome.

    Results and failures are sorted by itinerary whatever the completion
    order. ``min_pairwise_distance`` is the smallest Euclidean distance
    between converged points of equal period (inf with fewer than two).
    With ``workers > 1`` the itineraries are spread over worker processes.
    """
    jobs = [(part, s, tol, max_iter) for s in itineraries]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_solve_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        outcomes = [_solve_one(job) for job in jobs]

    results = sorted((r for _, r, _ in outcomes if r is not None), key=lambda r: r.itinerary.sort_key())
    failures = sorted((f for _, _, f in outcomes if f is not None), key=lambda f: f.itinerary.sort_key())

    periods = {len(s) for s in itineraries}
    by_period: dict[int, list[complex]] = {}
    for r in results:
        by_period.setdefault(r.period, []).append(r.point)
    min_dist = min((min_pairwise_distance(p) for p in by_period.values()), default=math.inf)

    if window is None:
        window = sorted({d for s in itineraries for d in s})
    return BatchReport(
        window=list(window),
        period=periods.pop() if len(periods) == 1 else None,
        results=results,
        failures=failures,
        min_pairwise_distance=min_dist,
        minimal_count=sum(1 for r in results if not is_proper_power(r.itinerary)),
    )
