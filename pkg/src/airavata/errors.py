"""Exception hierarchy shared across the package.

Every error raised on purpose derives from AiravataError so callers can
catch domain failures without swallowing programming mistakes.
"""


class AiravataError(Exception):
    """Base class for all expected failures."""


class ContractError(AiravataError):
    """A precondition on an operation was violated by the caller."""


class ScopeConflictError(ContractError):
    """Two factors share a variable name but disagree on its states."""


class UnknownVariableError(AiravataError):
    """A variable name does not exist in the scope, network, or dataset."""


class UnknownStateError(AiravataError):
    """A state name is not among the variable's declared states."""


class ZeroMassError(AiravataError):
    """Normalization was requested on an all-zero table."""


class InconsistentEvidenceError(AiravataError):
    """The supplied evidence has zero probability under the model."""


class SchemaError(AiravataError):
    """A dataset does not provide the columns or states an operation needs."""


class NetworkFormatError(AiravataError):
    """A serialized network document cannot be parsed."""


class JointSizeError(AiravataError):
    """Materializing the full joint would exceed the configured cap."""
