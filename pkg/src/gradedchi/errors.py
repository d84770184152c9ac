"""Exception types shared across the package.

AlgebraError covers every user-facing computation failure (zero modules,
improper intersections, non-homogeneous input, ...). The CLI maps
AlgebraError to exit status 1 and check failures to exit status 2.
"""


class AlgebraError(Exception):
    """A computation was asked for that is undefined on the given input."""


class HomogeneityError(AlgebraError):
    """A polynomial that must be homogeneous is not."""


class ImproperIntersectionError(AlgebraError):
    """A length that must be finite is infinite."""


class SessionError(AlgebraError):
    """A syntax or validation error in a session file, with a location."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)
