"""Exception types shared across the library."""


class IsomlabError(Exception):
    """Base class for all library errors."""


class InvalidDimension(IsomlabError):
    """Matrix or coordinate dimensions are unsupported or inconsistent."""


class NotHermitian(IsomlabError):
    """Input expected to be Hermitian deviates beyond tolerance."""


class SpecMismatch(IsomlabError):
    """Norm spec and argument belong to different matrix spaces."""


class InvalidNormSpec(IsomlabError):
    """Norm parameters are outside their legal range."""


class DegeneratePoint(IsomlabError):
    """Gradient requested at a point where the norm is not smooth."""


class NotSpecialOrthogonal(IsomlabError):
    """Orthogonal matrix has determinant -1 where +1 is required."""


class SingularMap(IsomlabError):
    """Linear map is singular or too ill-conditioned to invert."""


class NotIsometry(IsomlabError):
    """Map fails the norm-isometry check beyond tolerance."""


class NotInClassifiedForm(IsomlabError):
    """Isometry does not match any of the classified canonical forms."""


class RecoveryFailed(IsomlabError):
    """Canonical-form recovery could not be carried out."""


class NotAdjointImage(RecoveryFailed):
    """Map is not the adjoint image of any unitary/orthogonal matrix.

    Carries the reconstruction residual of the best attempt when one was
    computed.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class InconclusiveDimension(IsomlabError):
    """No clear spectral gap; the null-space dimension cannot be trusted."""
