"""Exception types shared across the package."""


class CordantError(Exception):
    """Base class for all package-specific errors."""


class InvalidSpecError(CordantError, ValueError):
    """A group presentation is malformed (factor < 2, wrong type, ...)."""


class InvalidElementError(CordantError, ValueError):
    """An element tuple does not conform to its group presentation."""


class InvalidGraphError(CordantError, ValueError):
    """A graph violates its declared kind or basic simple-graph rules."""


class InvalidLabelingError(CordantError, ValueError):
    """A labeling is structurally unusable (wrong group, wrong length type)."""


class InapplicableGroupError(CordantError, ValueError):
    """A construction was asked for a group outside its applicability range."""


class PreconditionError(CordantError, ValueError):
    """A transfer or rewrite was fed input that fails its precondition."""


class CapExceededError(CordantError, ValueError):
    """An enumeration or table request exceeds the configured safety cap."""


class InternalCheckError(CordantError, RuntimeError):
    """A constructed object failed its own verifier; indicates a bug."""
