"""Exception hierarchy shared by every module."""


class SrgciError(ValueError):
    """Base class for all library errors."""


class VertexOutOfRange(SrgciError):
    pass


class UncoveredVertex(SrgciError):
    pass


class NotAFace(SrgciError):
    pass


class NotSquarefree(SrgciError):
    pass


class NotDegreeTwo(SrgciError):
    pass


class NotEquigenerated(SrgciError):
    pass


class ZeroIdeal(SrgciError):
    pass


class UnitIdeal(SrgciError):
    pass


class PositiveDegree(SrgciError):
    pass


class NotPure(SrgciError):
    pass


class OutsideCharacterization(SrgciError):
    """The input violates a precondition of a characterization (e.g. core != complex)."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class InternalDisagreement(SrgciError):
    """Routes that are proven equivalent returned different answers; an implementation bug."""


class ParseError(SrgciError):
    pass
