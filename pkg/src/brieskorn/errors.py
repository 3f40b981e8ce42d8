"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """Input lies outside the domain an operation is defined on."""


class NotApplicable(DomainError):
    """The requested construction does not apply to this graph.

    ``flag`` carries a short provenance string that reports can surface
    verbatim (for instance, why a fillable count was not derived).
    """

    def __init__(self, message: str, flag: str | None = None):
        super().__init__(message)
        self.flag = flag


class VerificationMismatch(Exception):
    """A computed value disagrees with a reference value it was checked against."""
