"""Exception hierarchy shared across the package."""


class GentleSiltError(Exception):
    """Base class for all package-specific errors."""


class StructuralError(GentleSiltError):
    """Malformed input data (dangling references, duplicate ids, bad shapes).

    Deliberately distinct from axiom violations: a structurally broken
    presentation cannot even be checked against the gentle axioms.
    """


class NotGentleError(GentleSiltError):
    """An operation that requires a gentle presentation got a non-gentle one."""


class NotHereditaryError(GentleSiltError):
    """Presentation has relations where a hereditary algebra was required."""


class NotHereditaryGentleTypeError(GentleSiltError):
    """Underlying graph is neither a path nor a cycle."""


class NotFiniteDimensionalError(GentleSiltError):
    """The presentation admits arbitrarily long nonzero paths."""


class UnsupportedTopologyError(GentleSiltError):
    """Surface construction left the disk/annulus world."""


class InternalConsistencyError(GentleSiltError):
    """A cross-check between two independent computations failed.

    This always signals a bug (or a falsified theorem), never bad user input.
    """


class BoundExceededError(GentleSiltError):
    """A bounded search (mutation completion, string length) hit its cap."""


class ClassificationViolation(GentleSiltError):
    """An endomorphism algebra fits none of the expected structural forms."""
