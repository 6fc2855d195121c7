"""Exception types and validation reports shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass, field


class MoritakitError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatch(MoritakitError):
    """A partial map was queried outside its domain of definition."""


class UnknownObject(MoritakitError):
    """An object identifier is not part of the groupoid."""


class NotAnEquivalence(MoritakitError):
    """The supplied relation is not reflexive, symmetric and transitive."""


class NotAGroup(MoritakitError):
    """The supplied multiplication table is not a group."""


class NotPrePrincipal(MoritakitError):
    """A division map was requested for a bundle that is not pre-principal."""


class NotBiprincipal(MoritakitError):
    """A Morita witness was requested for a bibundle that is not biprincipal."""


class GroupoidMismatch(MoritakitError):
    """Two structures that must share a groupoid do not."""


class IllDefined(MoritakitError):
    """A quotient-level map gave different values on representatives of one class.

    The theory says this cannot happen; raising it means a bug, not bad input.
    """


class BoundsTooLarge(MoritakitError):
    """Requested enumeration bounds exceed the configured guard."""

    def __init__(self, estimate, limit):
        super().__init__(f"enumeration estimate {estimate} exceeds limit {limit}")
        self.estimate = estimate
        self.limit = limit


class UnknownSuite(MoritakitError):
    """run_suite was asked for a suite name it does not know."""


class ParseError(MoritakitError):
    """An object file could not be parsed."""

    def __init__(self, message, path=None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path


class UnresolvedReference(MoritakitError):
    """An object file references another file that cannot be loaded."""


@dataclass(frozen=True)
class Violation:
    """One violated law: a kind tag plus the offending witness tuple."""

    kind: str
    witness: tuple

    def __str__(self):
        return f"{self.kind}: {self.witness!r}"


@dataclass
class ValidationReport:
    """Outcome of validating a raw structure against its axioms."""

    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness: tuple):
        self.violations.append(Violation(kind, tuple(witness)))

    def kinds(self):
        return {v.kind for v in self.violations}

    def merge(self, other: "ValidationReport"):
        self.violations.extend(other.violations)

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


class ValidationFailed(MoritakitError):
    """Raised when a constructor or loader receives invalid data."""

    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report
