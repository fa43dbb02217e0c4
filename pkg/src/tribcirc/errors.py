"""Exception types.

Every exception name doubles as the ``skip_reason`` written by the verifier,
so the class names are part of the report format.
"""


class TribcircError(ValueError):
    """Base class for all precondition failures raised by this package."""


class ZeroRCoefficient(TribcircError):
    """The Tribonacci-Lucas sequence needs R != 0 (its S_0 is -Q/R)."""


class MissingK(TribcircError):
    pass


class RepeatedRoots(TribcircError):
    """The characteristic cubic has a multiple root."""


class ZeroRootNegativePower(TribcircError):
    pass


class OrderCapExceeded(TribcircError):
    pass


class DegenerateCharacter(TribcircError):
    """The eigenvalue denominator vanishes at this DFT character."""


class SingularParameterSum(TribcircError):
    """P + Q + R == 1, so the norm closed form divides by zero."""


class NegativeEntriesUnsupported(TribcircError):
    """The first row is not non-negative, so j = 0 need not be the maximal eigenvalue."""


class ZeroLeadingTerm(TribcircError):
    """Leading coefficient of the quadratic numerator factor is zero."""


class DegenerateDenominator(TribcircError):
    pass


class IndexUnderflow(TribcircError):
    pass


class ConfigInvalid(TribcircError):
    pass
