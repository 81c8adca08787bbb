"""recres: exact resultants of recursively defined polynomial sequences.

Polynomial sequences r_n over Q or F_p defined by the nonlinear
recurrence

    r_n = g_n r_{n-1}^m + sum_{|alpha| < m} t_{alpha,n} r^alpha r_{n-1}
          + v_n x^l r_{n-2}^m

admit closed forms for deg r_n, lc(r_n), r_n(0) and Res(r_n, r_{n-1}).
This package evaluates those closed forms and differentially checks
them against two independent resultant algorithms (Sylvester
determinant and Euclidean remainder sequence), both exact.
"""

from .field import (
    DescriptorMismatch,
    DivisionByZero,
    FieldDescriptor,
    FieldKind,
    InvalidModulus,
    Scalar,
    from_integer,
    is_prime,
    prime_field,
    rationals,
    scalar_arith,
)
from .poly import NEG_INFINITY, Poly, ring_arith
from .resultant import (
    BothConstantError,
    BothZeroError,
    Matrix,
    NotSquareError,
    ZeroPolynomialError,
    determinant,
    resultant_euclid,
    resultant_sylvester,
    sylvester_matrix,
)
from .recurrence import (
    DegreeMismatchError,
    InvalidParamsError,
    MissingStepError,
    RecurrenceSpec,
    StepCoeffs,
    TTerm,
    ValidationFailedError,
    ValidationReport,
    Violation,
    WindowSizeError,
    generate,
    linear_recurrence,
    order_two_recurrence,
    schur_recurrence,
    step,
    validate,
)
from .closedform import (
    FormulaContext,
    ZeroCoefficientError,
    degree_formula,
    exponents,
    order_two_formula,
    schur_formula,
    step_sign_exponent,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # field
    "FieldDescriptor", "FieldKind", "Scalar", "rationals", "prime_field",
    "from_integer", "scalar_arith", "is_prime",
    "DescriptorMismatch", "DivisionByZero", "InvalidModulus",
    # poly
    "Poly", "NEG_INFINITY", "ring_arith",
    # resultant
    "Matrix", "sylvester_matrix", "determinant",
    "resultant_sylvester", "resultant_euclid",
    "NotSquareError", "ZeroPolynomialError", "BothConstantError", "BothZeroError",
    # recurrence
    "RecurrenceSpec", "StepCoeffs", "TTerm", "ValidationReport", "Violation",
    "validate", "step", "generate",
    "schur_recurrence", "linear_recurrence", "order_two_recurrence",
    "MissingStepError", "WindowSizeError", "ValidationFailedError",
    "DegreeMismatchError", "InvalidParamsError",
    # closedform
    "FormulaContext", "degree_formula", "exponents", "step_sign_exponent",
    "schur_formula", "order_two_formula", "ZeroCoefficientError",
]
