"""Exception taxonomy shared across the package.

Every error raised by this package derives from LeonardError, so callers
can catch one base class.  A few classes also derive from the matching
builtin (ZeroDivisionError, IndexError) so generic handlers keep working.
"""


class LeonardError(Exception):
    """Base class for all errors raised by this package."""


# -- field arithmetic ------------------------------------------------------

class ContextMismatch(LeonardError):
    """Two elements from different field contexts were combined."""


class DivisionByZero(LeonardError, ZeroDivisionError):
    """Division by the zero element of a field."""


class ParseError(LeonardError, ValueError):
    """Text does not match the element grammar."""


class ZeroDenominator(ParseError):
    """A rational literal with denominator zero."""


class ReducibleModulus(LeonardError, ValueError):
    """Extension field modulus is not irreducible over its prime field."""


# -- type specs and parameter arrays ---------------------------------------

class InvalidSpec(LeonardError):
    """A type spec violates one or more constraint clauses."""

    def __init__(self, violations, message=None):
        self.violations = list(violations)
        if message is None:
            message = "; ".join(f"{v.clause}: {v.detail}" for v in self.violations)
        super().__init__(message)


class UnsupportedCharacteristic(InvalidSpec):
    """The field characteristic conflicts with the type's characteristic clause."""


class DegenerateArray(LeonardError):
    """Computed sequences violate parameter array invariants.

    Signals a gap in the constraint checks, not bad user input.
    """


class ZeroScale(LeonardError, ValueError):
    """Affine transformation with a zero scale factor."""


# -- realizations ----------------------------------------------------------

class RepeatedEigenvalue(LeonardError, ValueError):
    """Eigenvalue list passed to the idempotent construction is not distinct."""


class IdempotentCheckFailed(LeonardError):
    """A computed projection fails E*E = E; the input matrix was bad."""


class SingularBasis(LeonardError):
    """The candidate standard-basis vectors are linearly dependent."""


class SingularMatrix(LeonardError):
    """Exact linear solve hit a singular coefficient matrix."""


class AxiomViolation(LeonardError):
    """A tridiagonal-vanishing or diagonal-coefficient axiom check failed."""

    def __init__(self, which, i, j, message=""):
        self.which = which
        self.i = i
        self.j = j
        super().__init__(f"{which} at ({i},{j}) {message}".rstrip())


# -- zero diagonal space ----------------------------------------------------

class ZeroDiagCheckFailed(LeonardError):
    """A kernel element failed the zero-diagonal verification."""


class NoClosedForm(LeonardError):
    """dim Z = 1 but no closed-form table row matches the instance."""


class DependenceDetected(LeonardError):
    """The five canonical generators came out linearly dependent."""


class IndexOutOfRange(LeonardError, IndexError):
    """Index outside the admissible interior range."""


# -- analysis / verification -----------------------------------------------

class IdentityFailure(LeonardError):
    """An exact identity that must hold on every valid instance failed."""

    def __init__(self, i, j, lhs, rhs):
        self.i = i
        self.j = j
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"identity failed at ({i},{j}): {lhs} != {rhs}")


class RelationFailure(LeonardError):
    """The per-type linear relation between the boundary products failed."""

    def __init__(self, i, message=""):
        self.i = i
        super().__init__(f"relation failed at index {i} {message}".rstrip())


class TableInconsistency(LeonardError):
    """Two routes that must agree on the spin predicate disagreed."""


class MismatchAtEntry(LeonardError):
    """A golden-value comparison failed at a specific matrix entry."""

    def __init__(self, label, entry, got, expected):
        self.label = label
        self.entry = entry
        self.got = got
        self.expected = expected
        super().__init__(f"{label} mismatch at {entry}: got {got}, expected {expected}")


class SamplingExhausted(LeonardError):
    """Could not draw a constraint-satisfying sample within the retry budget."""
