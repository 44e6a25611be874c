"""Exception hierarchy. Every error raised by the library derives from
:class:`TractorbitError` so batch drivers can record failures uniformly."""


class TractorbitError(Exception):
    pass


class PoleHit(TractorbitError):
    pass


class RadiusTooSmall(TractorbitError):
    pass


class OutsideTract(TractorbitError):
    pass


class OffDomain(TractorbitError):
    pass


class NoConvergence(TractorbitError):
    pass


class BranchEscape(TractorbitError):
    pass


class OutsideHalfPlane(TractorbitError):
    pass


class DeltaMeetsTract(TractorbitError):
    pass


class EmptyWindow(TractorbitError):
    pass


class IntermediateOffDomain(TractorbitError):
    pass


class NotRepelling(TractorbitError):
    pass


class DerivativeSingular(TractorbitError):
    pass


class InvalidItinerary(TractorbitError):
    pass
