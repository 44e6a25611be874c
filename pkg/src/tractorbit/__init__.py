"""Repelling periodic points of transcendental maps with a logarithmic
singularity over infinity, constructed as fixed points of composed inverse
branches over fundamental domains."""
from .enumerator import BatchReport, batch_solve, generate_itineraries
from .errors import TractorbitError
from .function_model import (
    DomainId,
    Family,
    FunctionSpec,
    classify_preimage_components,
    derivative,
    evaluate,
    inverse_branch,
    phi,
    singular_radius,
)
from .hyperbolic import (
    KappaEstimate,
    contraction_ratio_bound,
    density_halfplane,
    density_lower_bound,
    distance_halfplane,
    kappa_for_threshold,
)
from .partition import PartitionSpec, build_partition, domain_avoids_disk, domain_window
from .solver import (
    Itinerary,
    PeriodicPointResult,
    is_proper_power,
    multiplier,
    newton_refine,
    psi_s,
    solve_periodic,
)

__version__ = "0.1.0"
