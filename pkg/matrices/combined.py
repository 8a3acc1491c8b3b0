"""
Combined matrix C(A) = A o (A^-1)^T, computed from cofactors or from the exact inverse.
"""

import enum
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .conf import resolve
from .exact import RMatrix, complementary_minor, det, hadamard, inverse
from .exceptions import SingularMatrixError


class Route(enum.Enum):
    COFACTOR_FORMULA = "cofactor-formula"
    INVERSE_HADAMARD = "inverse-hadamard"


@dataclass(frozen=True)
class CombinedResult:
    matrix: RMatrix
    det_a: Fraction
    route: Route


def combined(a):
    """
    c_ij = (-1)^(i+j) a_ij A_ij / det A. Zero entries of A give zero entries of
    C(A) without computing their complementary minor.
    """
    d = det(a)
    if d == 0:
        raise SingularMatrixError("the combined matrix needs a nonsingular matrix")

    def entry(i, j):
        a_ij = a[i, j]
        if a_ij == 0:
            return 0
        return (-1) ** (i + j) * a_ij * complementary_minor(a, i, j) / d

    return CombinedResult(RMatrix.from_function(a.n, entry), d, Route.COFACTOR_FORMULA)


def combined_via_inverse(a, method=None):
    d = det(a)
    if d == 0:
        raise SingularMatrixError("the combined matrix needs a nonsingular matrix")
    matrix = hadamard(a, inverse(a, method=method).transpose())
    return CombinedResult(matrix, d, Route.INVERSE_HADAMARD)


def row_col_sums(c):
    row_sums = tuple(sum(row, Fraction(0)) for row in c.rows)
    col_sums = tuple(sum(col, Fraction(0)) for col in zip(*c.rows))
    return row_sums, col_sums


def is_doubly_stochastic(c):
    rows, cols = row_col_sums(c)
    return (
        all(value >= 0 for _, _, value in c.entries())
        and all(s == 1 for s in rows)
        and all(s == 1 for s in cols)
    )


def render_decimal(value, digits=None):
    """
    Round an exact rational to ``digits`` significant digits, half-even, and
    print it without an exponent.
    """
    digits = resolve("DIGITS", digits)
    value = Fraction(value)
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        rounded = Decimal(value.numerator) / Decimal(value.denominator)
    return format(rounded, "f")


def render_matrix(c, digits=None, scale_exponent=None):
    """
    Decimal rows of ``c``. With ``scale_exponent`` k every entry is divided by
    10^k and the caller prints a "1.0e+0k *" header, as numeric tables do.
    """
    factor = Fraction(10) ** scale_exponent if scale_exponent else Fraction(1)
    return [[render_decimal(x / factor, digits) for x in row] for row in c.rows]


def scale_header(scale_exponent):
    if not scale_exponent:
        return ""
    sign = "+" if scale_exponent > 0 else "-"
    return f"1.0e{sign}{abs(scale_exponent):02d} *"
