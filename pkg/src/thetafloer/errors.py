"""Exception hierarchy.

Input errors map to CLI exit code 2, internal mismatches to exit code 3.
"""


class FloerError(Exception):
    """Base class; ``code`` is a short machine-readable identifier."""

    code = "error"
    exit_code = 2


class InputError(FloerError, ValueError):
    code = "input_error"
    exit_code = 2


class InternalError(FloerError, RuntimeError):
    code = "internal_error"
    exit_code = 3


class OrderMismatch(InputError):
    code = "order_mismatch"


class DivisionByZero(InputError, ZeroDivisionError):
    code = "division_by_zero"


class NoFixedPoints(InputError):
    code = "no_fixed_points"


class TooFewBranchPoints(InputError):
    code = "too_few_branch_points"


class NotAntiSymmetric(InputError):
    code = "not_anti_symmetric"


class NonIntegralMultiplicity(InputError):
    code = "non_integral_multiplicity"


class Inconsistent(InternalError):
    code = "inconsistent"


class TruncationTooSmall(InputError):
    code = "truncation_too_small"


class TruncationAmbiguous(InternalError):
    code = "truncation_ambiguous"


class GradingInconsistent(InternalError):
    code = "grading_inconsistent"


class HasTowers(InputError):
    code = "has_towers"


class GenusOutOfRange(InputError):
    code = "genus_out_of_range"


class NotCoprime(InputError):
    code = "not_coprime"


class MismatchDetected(InternalError):
    code = "mismatch_detected"
