"""Exception types shared across the package."""


class SatGeomError(Exception):
    """Base class for all library errors."""


class NotPrimePower(SatGeomError):
    """q is not of the form p^m with p prime, m >= 1."""


class DivisionByZero(SatGeomError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ResourceLimit(SatGeomError):
    """A configured size cap would be exceeded."""


class SamePoint(SatGeomError):
    """Two distinct points were required but the same index was given twice."""


class ParseError(SatGeomError):
    """Malformed input file."""


class AxiomViolation(SatGeomError):
    """Incidence data fails a projective-plane axiom.

    The `axiom` attribute names the failed axiom: "counts", "line-size",
    "point-degree" or "pair-uniqueness".
    """

    def __init__(self, axiom: str, detail: str = ""):
        self.axiom = axiom
        super().__init__(f"plane axiom violated ({axiom}){': ' + detail if detail else ''}")


class AlreadySaturating(SatGeomError):
    """A greedy step was requested but no point is left uncovered."""


class PairingFailure(SatGeomError):
    """No valid pairing point exists for a pair of uncovered points."""


class NonPositiveFactor(SatGeomError):
    """A factor of the step-reduction product is <= 0."""


class ConditionViolated(SatGeomError):
    """An estimate was requested outside the range where it is claimed."""


class DomainError(SatGeomError):
    """A formula argument is outside its mathematical domain."""


class BranchInapplicable(SatGeomError):
    """No bound branch applies to the given parameters.

    `reasons` lists the violated side conditions.
    """

    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


class DuplicatePoint(SatGeomError):
    """A point set that must consist of distinct points has a repeat."""
