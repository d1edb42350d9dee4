"""Exceptions shared across the package.

The command line maps these onto process exit codes; see ``cli`` for the
mapping.  Plain ``ValueError`` is used everywhere for malformed input.
"""


class EnumerationCapExceeded(RuntimeError):
    """Raised when a requested enumeration would exceed the configured cap."""


class PolarizationNotFound(RuntimeError):
    """Raised when a coefficient box contains no principal positive form."""


class RiemannRelationsViolated(RuntimeError):
    """Raised when no block convention yields a symmetric positive period matrix."""


class InternalCheckFailed(RuntimeError):
    """Raised when a redundant cross-check (Burnside count, exact matrix
    identities, ...) disagrees with the primary computation."""
