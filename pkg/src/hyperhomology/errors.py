"""Exception types shared across the package.

The CLI maps these onto exit codes: parse/config problems -> 2,
resource caps -> 3, failed invariant or theorem checks -> 4.
"""


class ParseError(ValueError):
    """Malformed input file or unparseable configuration value."""


class ResourceCapError(RuntimeError):
    """A configured size cap (vertex count, simplex count) was exceeded."""


class InvariantViolation(RuntimeError):
    """A structural invariant failed; carries a human-readable certificate."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class TheoremCheckError(RuntimeError):
    """A verified identity reported false on a concrete instance."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
