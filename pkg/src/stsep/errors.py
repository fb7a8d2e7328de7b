"""Exception types shared across the package."""


class StsepError(Exception):
    pass


class DegenerateOverlap(StsepError):
    """An obstacle runs along the reference path in a way that cannot be oriented."""


class PointOnObstacle(StsepError):
    pass


class PointNotOnObstacle(StsepError):
    pass


class InvalidInstance(StsepError):
    pass


class UnsupportedShape(StsepError):
    pass


class PointOnSkeleton(StsepError):
    pass


class DisconnectedObstacleSubgraph(StsepError):
    pass


class Infeasible(StsepError):
    pass


class NonUnitWeights(StsepError):
    pass


class TooLarge(StsepError):
    pass


class KindMismatch(StsepError):
    pass


class NotAxisAligned(StsepError):
    pass


class SelfLoop(StsepError):
    pass


class UnsupportedPath(StsepError):
    """The solver only works with the segment st as reference path."""
