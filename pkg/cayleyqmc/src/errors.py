import functools


class CayleyQMCBaseError(Exception):
    """CayleyQMCBase error"""


class CayleyQMCError(CayleyQMCBaseError):
    """CayleyQMC error"""


class LinalgError(CayleyQMCError):
    """Linalg error"""


class DisjointnessError(LinalgError):
    """Overlapping site sets in a tensor product"""


class EmbeddingError(LinalgError):
    """Operator sites are not contained in the target sites"""


class SiteError(LinalgError):
    """Invalid site list"""


class HermiticityError(LinalgError):
    """Operator is not Hermitian within tolerance"""


class TreeError(CayleyQMCError):
    """Tree error"""


class ModelError(CayleyQMCError):
    """Model error"""


class ParameterError(ModelError):
    """Nonpositive or non-finite model parameter"""


class BoundaryError(CayleyQMCError):
    """Boundary error"""


class DomainError(BoundaryError):
    """Point outside the domain x > y >= 0"""


class DomainViolation(BoundaryError):
    """Pull-up map undefined at the given point"""

    def __init__(self, x, y, threshold):
        self.x = x
        self.y = y
        self.threshold = threshold
        self.deficit = threshold - x
        super().__init__(
            f'pull-up undefined at ({x!r}, {y!r}): x is below the '
            f'threshold {threshold!r} by {self.deficit!r}')


class NotApplicableError(BoundaryError):
    """Check does not apply to the given point"""


class StateError(CayleyQMCError):
    """State error"""


class FeasibilityError(StateError):
    """Volume too large for the requested engine"""


class SupportError(StateError):
    """Observable support exceeds the volume"""


class ObservableParseError(CayleyQMCError):
    """Observable file could not be parsed"""


class UsageError(CayleyQMCError):
    """Command-line usage error"""


def err(error, logger, message):
    logger.debug(message)
    raise error(message)


def on_error_raise(error, logger, catch_error=Exception, message=None):
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except CayleyQMCBaseError:
                raise
            except catch_error as e:
                err(error, logger, message or str(e))
        return wrapper
    return decorator
