class WorkbenchError(Exception):
    """Base class for analysis failures raised by the workbench."""


class InvalidArgumentError(WorkbenchError, ValueError):
    """An argument violates an operation's precondition."""


class InsufficientDataError(WorkbenchError):
    """A sequence is too short for the requested measurement."""


class StalledGeneratorError(WorkbenchError):
    """The control register never selects a bit (all-zero seed)."""


class DegenerateCosetError(InvalidArgumentError):
    """The cyclotomic coset of 2^L1 - 1 is smaller than L2."""


class SynthesisError(WorkbenchError, RuntimeError):
    """CA synthesis produced no rule vector with the requested characteristic polynomial."""


class WindowTooShortError(InvalidArgumentError):
    """Fewer intercepted bits than cells in the automaton."""


class VerificationMismatchError(WorkbenchError):
    """Regenerated keystream disagrees with the supplied verification bits."""


class ModelMismatchError(WorkbenchError):
    """No candidate automaton explains the intercepted window."""


class ZeroOperatorError(WorkbenchError):
    """A transfer operator reduces to zero modulo the characteristic polynomial."""
