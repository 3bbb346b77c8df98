"""Exception hierarchy shared across the package."""


class ZetamuError(Exception):
    """Base class for every error raised by this package."""


class NotAPerfectPower(ZetamuError):
    """A polynomial is not the d-th power of any polynomial."""


class PoleAtZero(ZetamuError):
    """A rational function has a pole at t = 0 and cannot be normalised."""


class NoReconstruction(ZetamuError):
    """A power-series prefix admits no rational function within the degree bounds."""


class NotSemisimple(ZetamuError):
    """The regular trace form of the algebra is degenerate."""


class NotPerfectSquare(ZetamuError):
    """A factor dimension is not delta * d^2 for any integer d."""


class NotInvertible(ZetamuError):
    """An element (or the multiplicity element) is singular."""


class Inconsistent(ZetamuError):
    """No central element reproduces the given trace functional."""


class NotScalar(ZetamuError):
    """A multiplicity component is not a rational multiple of the factor unit."""


class NotAntiAutomorphism(ZetamuError):
    """The supplied linear map does not reverse products."""


class DivisibilityViolation(ZetamuError):
    """A divisor entry does not divide the corresponding multiplicity."""


class NotIntegralType(ZetamuError):
    """Some multiplicity component is not a rational integer."""


class ExponentNotIntegral(ZetamuError):
    """A zeta exponent chi/deg is not an integer; the class data is inconsistent."""


class CommonFactor(ZetamuError):
    """Even and odd characteristic polynomials share a factor; no projector exists."""


class NotWeil(ZetamuError):
    """Coefficient symmetry of the degree-2g polynomial is violated."""


class SingularCurve(ZetamuError):
    """The Weierstrass discriminant vanishes."""


class HasseViolation(ZetamuError):
    """|q + 1 - N| exceeds 2*sqrt(q); the point count is corrupt."""


class CountMismatch(ZetamuError):
    """Predicted and enumerated point counts differ."""


class NotIrreducible(ZetamuError):
    """The polynomial is reducible where an irreducible one is required."""


class SchemaError(ZetamuError):
    """Malformed JSON input.  ``path`` is a JSON pointer to the offending value."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message
