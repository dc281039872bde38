"""Exception types shared across the package."""


class VlmcxError(Exception):
    """Base class for all package-specific errors."""


class HistoryTooShort(VlmcxError):
    """A history does not reach the depth required by a tree traversal."""


class DimensionMismatch(VlmcxError):
    """Covariate dimensions disagree with a parameter block or dataset."""


class DomainError(VlmcxError):
    """An argument is outside the mathematically valid domain."""


class LengthMismatch(VlmcxError):
    """Two aligned sequences have different lengths."""


class EmptyDataset(VlmcxError):
    """An operation requires at least one source series."""


class DegenerateDesign(VlmcxError):
    """A non-intercept regressor column is constant across all rows."""


class InvalidConstraint(VlmcxError):
    """A restricted-fit constraint refers to invalid tree locations."""


class EnumerationTooLarge(VlmcxError):
    """The exact-test table enumeration exceeds the configured cap."""


class AlphabetMismatch(VlmcxError):
    """Two trees do not share the same alphabet."""


class UnknownPreset(VlmcxError):
    """No built-in simulation model with the requested id."""


class MissingCovariates(VlmcxError):
    """A forecast window lacks required covariate rows."""


class InputFormatError(VlmcxError):
    """A malformed input file; carries a line number for diagnostics."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)
