"""
Error types shared by all MinRep tools.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0
"""


class MinRepError(Exception):
    """Base class for all toolbox errors."""


class DimensionError(MinRepError, ValueError):
    """Operands live in sl(n) for different n."""


class NotARootError(MinRepError, ValueError):
    """An index pair (i, i) was used where a root e_i - e_j is required."""


class PreconditionError(MinRepError, ValueError):
    """An operation was called outside its documented domain."""


class ResourceLimitError(MinRepError, RuntimeError):
    """A configured size bound (word length, m_max, ...) was exceeded."""


class VerificationError(MinRepError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
