"""Exception types shared across the package."""


class CwregError(Exception):
    """Base class for all errors raised by cwreg."""


class SizeCapExceeded(CwregError):
    """An exhaustive combinatorial search exceeded its configured cap."""


class GeneratorCapExceeded(CwregError):
    """An ideal computation exceeded a generator, lattice or variable cap.

    The sweep records these as skipped rows; `cap` names the limit hit.
    """

    def __init__(self, message, cap="gen-cap"):
        super().__init__(message)
        self.cap = cap


class InvalidVertex(CwregError, ValueError):
    pass


class GraphFormatError(CwregError, ValueError):
    pass


class NotCameronWalker(CwregError):
    pass


class NotConnected(CwregError):
    pass


class BoundsExceeded(CwregError, ValueError):
    pass


class PreconditionFailed(CwregError):
    pass
