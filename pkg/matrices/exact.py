"""
Exact rational matrices.

Every entry is a :class:`fractions.Fraction`, so determinants and inverses are
exact and sign decisions on minors are never affected by rounding. Indices in
the public API are 1-based: ``A[i, j]`` is the entry in row ``i``, column ``j``.
"""

from decimal import Decimal
from fractions import Fraction
from math import lcm

from .conf import get_setting
from .exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    MatrixParseError,
    SingularMatrixError,
)

Rational = Fraction


def to_rational(value):
    """
    Convert an int, Fraction, Decimal or string ("3", "-0.00001", "19/4") to a Fraction.

    Floats are refused: their binary expansion is rarely the number the user meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MatrixParseError(f"not an exact number: {value!r}") from exc
    if isinstance(value, float):
        raise TypeError(
            f"floating point entry {value!r}; pass it as a string to keep it exact"
        )
    raise TypeError(f"unsupported entry type {type(value).__name__}")


class RMatrix:
    """
    Dense square matrix of Fractions, immutable after construction.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if not rows:
            raise DimensionMismatchError("a matrix needs at least one row")
        n = len(rows)
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise DimensionMismatchError(
                    f"row {i} has {len(row)} entries, expected {n} (square matrix)"
                )
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RMatrix is immutable")

    @classmethod
    def from_function(cls, n, entry):
        """Build an n x n matrix from ``entry(i, j)`` with 1-based indices."""
        return cls(
            [[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        )

    @property
    def n(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, key):
        i, j = key
        _check_index(i, self.n)
        _check_index(j, self.n)
        return self._rows[i - 1][j - 1]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self._rows
        )
        return f"RMatrix([{body}])"

    def __neg__(self):
        return self.map(lambda x: -x)

    def __matmul__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        _check_same_order(self, other)
        cols = list(zip(*other._rows))
        return RMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        )

    def map(self, fn):
        return RMatrix([[fn(x) for x in row] for row in self._rows])

    def transpose(self):
        return RMatrix(zip(*self._rows))

    def entries(self):
        """Yield ``(i, j, value)`` for every position, 1-based, row-major."""
        for i, row in enumerate(self._rows, start=1):
            for j, value in enumerate(row, start=1):
                yield i, j, value


def _check_index(i, n):
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRangeError(f"index {i!r} outside 1..{n}")


def _check_same_order(a, b):
    if a.n != b.n:
        raise DimensionMismatchError(f"orders differ: {a.n} and {b.n}")


def index_set(indices, n):
    """
    Validate a strictly increasing sequence of indices in 1..n and return it as a tuple.
    """
    indices = tuple(indices)
    if not indices:
        raise IndexOutOfRangeError("an index set needs at least one index")
    for i in indices:
        _check_index(i, n)
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise IndexOutOfRangeError(f"indices {indices} are not strictly increasing")
    return indices


# Structural matrices


def identity(n):
    return RMatrix.from_function(n, lambda i, j: 1 if i == j else 0)


def diagonal(values):
    values = [to_rational(v) for v in values]
    return RMatrix.from_function(len(values), lambda i, j: values[i - 1] if i == j else 0)


def backward_identity(n):
    """P_n: ones where i + j = n + 1. Left multiplication reverses the row order."""
    return RMatrix.from_function(n, lambda i, j: 1 if i + j == n + 1 else 0)


def alternating_sign(n):
    """S_n = diag(1, -1, 1, ...)."""
    return diagonal([(-1) ** (i - 1) for i in range(1, n + 1)])


def permutation_matrix(perm):
    """
    Matrix with a one at ``(i, perm[i-1])``; ``perm`` is a permutation of 1..n.
    """
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise IndexOutOfRangeError(f"{perm} is not a permutation of 1..{n}")
    return RMatrix.from_function(n, lambda i, j: 1 if perm[i - 1] == j else 0)


def hadamard(a, b):
    _check_same_order(a, b)
    return RMatrix(
        [[x * y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)]
    )


def absolute(a):
    return a.map(abs)


# Determinants


def _bareiss(m):
    """
    Fraction-free elimination on a square list of int lists (mutated).
    Every division is exact.
    """
    n = len(m)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * m[n - 1][n - 1]


def _det_rows(rows):
    """Exact determinant of a square sequence of Fraction rows (0 x 0 gives 1)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    common = lcm(*(x.denominator for row in rows for x in row))
    scaled = [[x.numerator * (common // x.denominator) for x in row] for row in rows]
    return Fraction(_bareiss(scaled), common**n)


def det(a):
    """
    Exact determinant: denominators are cleared, integer Bareiss elimination
    runs, and the cleared factor is divided back out.
    """
    return _det_rows(a.rows)


def det_cofactor(a):
    """Laplace expansion along the first row. Exponential; kept as a cross-check."""

    def expand(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, head in enumerate(rows[0]):
            if head == 0:
                continue
            rest = [row[:j] + row[j + 1 :] for row in rows[1:]]
            term = head * expand(rest)
            total += -term if j % 2 else term
        return total

    return expand(a.rows)


def minor(a, rows, cols):
    """det A[rows|cols] for 1-based index tuples, without building a submatrix."""
    return _det_rows([[a.rows[i - 1][j - 1] for j in cols] for i in rows])


def submatrix(a, rows, cols):
    rows = index_set(rows, a.n)
    cols = index_set(cols, a.n)
    if len(rows) != len(cols):
        raise DimensionMismatchError(
            f"{len(rows)} rows and {len(cols)} columns do not form a square submatrix"
        )
    return RMatrix([[a.rows[i - 1][j - 1] for j in cols] for i in rows])


def complementary_minor(a, i, j):
    """
    A_ij: determinant of A without row i and column j. For a 1 x 1 matrix this
    is the empty determinant, 1.
    """
    _check_index(i, a.n)
    _check_index(j, a.n)
    return _det_rows(
        [
            row[: j - 1] + row[j:]
            for r, row in enumerate(a.rows, start=1)
            if r != i
        ]
    )


# Inverses


def inverse(a, method=None):
    """
    Exact inverse. ``method`` is "adjugate", "elimination", or None to pick by
    order (adjugate up to ``ADJUGATE_MAX_ORDER``).
    """
    if method is None:
        method = "adjugate" if a.n <= get_setting("ADJUGATE_MAX_ORDER") else "elimination"
    if method == "adjugate":
        return _inverse_adjugate(a)
    if method == "elimination":
        return _inverse_elimination(a)
    raise ValueError(f"unknown inverse method {method!r}")


def _inverse_adjugate(a):
    d = det(a)
    if d == 0:
        raise SingularMatrixError("matrix is singular (determinant 0)")
    # inverse[i][j] = (-1)^(i+j) A_ji / det A
    return RMatrix.from_function(
        a.n, lambda i, j: (-1) ** (i + j) * complementary_minor(a, j, i) / d
    )


def _inverse_elimination(a):
    n = a.n
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.rows)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular (no pivot in elimination)")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [x / pivot for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return RMatrix([row[n:] for row in work])
