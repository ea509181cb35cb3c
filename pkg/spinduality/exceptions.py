"""
Exception hierarchy for spinduality.

Errors that describe bad input also derive from ValueError so callers can
treat them the way the rest of the stack treats invalid requests.
"""


class SpinDualityError(Exception):
    """Base class for every error raised by the package"""


class WeightMismatchError(SpinDualityError, ValueError):
    """A partition does not have the weight the operation requires"""


class InvalidPartitionError(SpinDualityError, ValueError):
    """A part sequence is not a partition of the required family"""


class SizeMismatchError(SpinDualityError, ValueError):
    """Operands live in algebras or spaces of different sizes"""


class IndexRangeError(SpinDualityError, ValueError):
    """A generator index is outside its admissible range"""


class NonHomogeneousError(SpinDualityError, ValueError):
    """A map or vector mixes even and odd components where a degree is required"""


class NotInvariantError(SpinDualityError, ValueError):
    """An operator does not stabilize the subspace it is restricted to"""


class SingularMatrixError(SpinDualityError, ValueError):
    """A matrix that must be invertible is singular"""


class CacheFormatError(SpinDualityError, ValueError):
    """A cached character table could not be parsed"""


class InvalidRunConfigError(SpinDualityError, ValueError):
    """Command-line options do not describe a valid run"""


class ResourceLimitError(SpinDualityError):
    """A requested computation exceeds the configured size bound"""
