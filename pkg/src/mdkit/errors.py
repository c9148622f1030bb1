"""Exception hierarchy for mdkit.

Every domain failure raises a subclass of :class:`MdkError`; the CLI maps
these to exit code 1 and everything else (usage mistakes) to exit code 2.
"""


class MdkError(Exception):
    """Base class for all domain errors raised by mdkit."""


class DimensionMismatchError(MdkError):
    """Shapes of S, T, or labels disagree with the declared rank."""


class NonIntegralError(MdkError):
    """A quantity that must be a (nonnegative) integer is not one.

    Parameters
    ----------
    message : str
    where : tuple, optional
        Index of the worst offending entry.
    residual : float, optional
        Distance from the nearest integer (or from admissibility).
    """

    def __init__(self, message, where=None, residual=None):
        super().__init__(message)
        self.where = where
        self.residual = residual


class NotAGroupError(MdkError):
    """A Cayley table fails a group axiom.

    Carries ``axiom`` ("closure", "identity", "associativity", "inverse")
    and ``witness``, the first offending element or triple.
    """

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class DegeneracyResolutionError(MdkError):
    """Randomized class-sum combinations failed to separate characters."""


class DegenerateFormError(MdkError):
    """The bilinear form attached to a quadratic form is degenerate."""


class NonRationalChargeError(MdkError):
    """No rational with bounded denominator matches the Gauss-sum phase."""


class ValidationFailedError(MdkError):
    """Modular data failed its axiom checks and --force was not given."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SearchBudgetError(MdkError):
    """A bounded enumeration would exceed its configured budget."""


class IncompleteEnumerationError(MdkError):
    """The solver hit its node cap before exhausting the search tree."""

    def __init__(self, message, nodes=None, cap=None):
        super().__init__(message)
        self.nodes = nodes
        self.cap = cap


class SpecParseError(MdkError):
    """A build-spec string failed to parse.

    ``position`` is the byte offset of the failure; ``expected`` the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, message, position=None, expected=None):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected) if expected else ()


class UnknownPresetError(MdkError):
    """Unknown preset name; carries the list of available names."""

    def __init__(self, message, available=()):
        super().__init__(message)
        self.available = tuple(available)
