"""
Exception hierarchy for the Black Swan logic toolkit.

Library code raises these; only the command-line entry point turns them into
exit codes. Verdicts (rejected proofs, counterexamples, incompleteness) are
reported as data, never raised.
"""

from typing import FrozenSet, Iterable, Optional


class BlackSwanError(Exception):
    """Root of all toolkit errors."""
    pass


class ConfigError(BlackSwanError):
    """Invalid or out-of-range configuration."""
    pass


class LogicError(BlackSwanError):
    """Errors raised by the first-order language layer."""
    pass


class ParseError(LogicError):
    """Text does not conform to the formula, proof or universe grammar."""

    def __init__(self, message: str, line: int = 1, column: int = 1,
                 expected: Optional[Iterable[str]] = None):
        self.message = message
        self.line = line
        self.column = column
        self.expected: FrozenSet[str] = frozenset(expected or ())
        super().__init__(self._describe())

    def _describe(self) -> str:
        text = f"line {self.line}, column {self.column}: {self.message}"
        if self.expected:
            text += f" (expected one of: {', '.join(sorted(self.expected))})"
        return text


class CaptureError(LogicError):
    """A substitution would bind a variable of the substituted term."""
    pass


class SignatureError(LogicError):
    """A signature or formula violates the declared vocabulary."""
    pass


class KernelError(BlackSwanError):
    """Misuse of the proof kernel (not a failed check)."""
    pass


class TheoryError(KernelError):
    """A theory contains an ill-formed or open formula."""
    pass


class UnknownTheory(KernelError, KeyError):
    """No theory is registered under the requested name."""

    def __str__(self):
        return Exception.__str__(self)


class SemanticsError(BlackSwanError):
    """Errors raised by the finite-model evaluator."""
    pass


class UnboundVariable(SemanticsError):
    """A free variable has no binding in the evaluation environment."""
    pass


class SizeCapExceeded(SemanticsError):
    """A model scan was requested beyond the configured size cap."""
    pass


class DecisionModelError(BlackSwanError):
    """Errors raised by the decision-model layer."""
    pass


class MissingTableEntry(DecisionModelError, KeyError):
    """The decision map has no entry for an outcome vector."""

    def __str__(self):
        return Exception.__str__(self)


class BoundsTooLarge(DecisionModelError):
    """A completeness search exceeds the configured bounds."""
    pass


class UniverseFileError(DecisionModelError, ParseError):
    """A universe/decision file is malformed or violates table totality."""

    def __init__(self, message: str, line: int = 1, column: int = 1,
                 expected: Optional[Iterable[str]] = None):
        ParseError.__init__(self, message, line, column, expected)
