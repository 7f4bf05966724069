"""Exception types.

Every domain error carries a ``code`` naming the failure kind; the CLI prints
that code verbatim in front of the message.
"""


class DerivError(ValueError):
    code = "DerivError"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class LengthMismatch(DerivError):
    code = "LengthMismatch"


class NotDominated(DerivError):
    code = "NotDominated"


class PolySyntaxError(DerivError):
    """Malformed polynomial text. ``position`` is the 0-based character offset."""

    code = "SyntaxError"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotHomogeneous(DerivError):
    code = "NotHomogeneous"


class WrongVariable(DerivError):
    code = "WrongVariable"


class DegreeMismatch(DerivError):
    code = "DegreeMismatch"


class VariableMismatch(DerivError):
    code = "VariableMismatch"


class DimensionMismatch(DerivError):
    code = "DimensionMismatch"


class AmbientMismatch(DerivError):
    code = "AmbientMismatch"


class OrderOutOfRange(DerivError):
    code = "OrderOutOfRange"


class NotContained(DerivError):
    code = "NotContained"


class DegenerateBasis(DerivError):
    code = "DegenerateBasis"


class SymmetryViolated(DerivError):
    code = "SymmetryViolated"


class ZeroPolynomial(DerivError):
    code = "ZeroPolynomial"


class ConfigInvalid(DerivError):
    code = "ConfigInvalid"


class InvariantViolation(AssertionError):
    """A mathematical invariant that can only fail through a bug."""
