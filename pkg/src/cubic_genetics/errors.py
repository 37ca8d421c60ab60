"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`CubicGraphError`,
and the class name doubles as the diagnostic tag printed by the CLI.
"""

from __future__ import annotations


class CubicGraphError(Exception):
    """Base class for all domain errors."""


# graph construction / I/O
class NotCubic(CubicGraphError):
    pass


class NotSimple(CubicGraphError):
    pass


class NotConnected(CubicGraphError):
    pass


class OddOrder(CubicGraphError):
    pass


class BadVertexId(CubicGraphError):
    pass


class MalformedEncoding(CubicGraphError):
    pass


# analysis
class NotACracker(CubicGraphError):
    pass


# operations
class InvalidEdge(CubicGraphError):
    pass


class InvalidVertex(CubicGraphError):
    pass


class BridgeEdge(CubicGraphError):
    pass


class BadPairing(CubicGraphError):
    pass


class NotABridge(CubicGraphError):
    pass


class NotA2Cracker(CubicGraphError):
    pass


class NotA3Cracker(CubicGraphError):
    pass


class NotOnBridge(CubicGraphError):
    pass


class Reducible1Cracker(CubicGraphError):
    pass


class Reducible2Cracker(CubicGraphError):
    pass


class NotADiamond(CubicGraphError):
    pass


class NotAParthBridge(CubicGraphError):
    pass


class NotAParthTriangle(CubicGraphError):
    pass


class WouldCreateMultiEdge(CubicGraphError):
    pass


class IsDiamondCase(CubicGraphError):
    pass


# genealogy
class NotADescendant(CubicGraphError):
    pass


class ReplayMismatch(CubicGraphError):
    pass


class BudgetExceeded(CubicGraphError):
    """Exhaustive search ran out of budget.

    ``partial`` carries whatever was collected before the limit was hit.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


# corpus
class SizeCeiling(CubicGraphError):
    pass
