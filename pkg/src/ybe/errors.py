"""Exception types shared across the library."""


class YbeError(Exception):
    """Base class for all errors raised by this library."""


class DegreeMismatch(YbeError):
    """Operands act on sets of different sizes."""


class IndexOutOfRange(YbeError):
    """A point index lies outside 1..n."""


class CapExceeded(YbeError):
    """An explicit size cap (group closure, canonicalization, enumeration) was hit."""


class SolutionError(YbeError):
    """Construction or validation failure; ``witness`` pinpoints the offender."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInvolutive(SolutionError):
    """r applied twice does not return every pair to itself."""


class NotNondegenerate(SolutionError):
    """Some left- or right-action map is not a bijection."""


class BraidFails(SolutionError):
    """The braid relation fails on some triple."""


class NotSquareFreeInput(SolutionError):
    """A sigma-table constructor was given a map not fixing its own index."""


class CriterionFails(SolutionError):
    """The product criterion sigma_i sigma_j = sigma_k sigma_l fails for some pair."""


class NotInvariant(SolutionError):
    """A subset is not closed under the permutation action."""


class IncompatiblePartition(SolutionError):
    """A partition is not compatible with the solution map."""


class NotAPartition(SolutionError):
    """The given subsets do not partition the ground set."""


class PreconditionUnmet(YbeError):
    """A check was invoked on input violating its stated hypotheses."""
