"""Exception types raised across the package."""


class BMError(ValueError):
    pass


class DegreeTooLarge(BMError):
    pass


class NotDivisible(BMError):
    pass


class NotSymmetric(BMError):
    pass


class InternalResidue(BMError):
    """Gamma peeling left a nonzero remainder; indicates a bug, not bad input."""


class EmptyPolynomial(BMError):
    pass


class PreconditionDegree(BMError):
    pass


class QuadratureNonConvergence(BMError):
    pass


class UnknownSequence(BMError, KeyError):
    pass


class LengthExceedsFixture(BMError):
    pass


class MalformedLine(BMError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: cannot parse {line!r}")
        self.lineno = lineno
        self.line = line


class NonMonotoneIndex(BMError):
    def __init__(self, lineno: int, index: int, previous: int):
        super().__init__(f"line {lineno}: index {index} does not exceed previous index {previous}")
        self.lineno = lineno
        self.index = index
        self.previous = previous
