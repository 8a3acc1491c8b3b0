"""
Zero-pattern structure of square matrices: index-set enumeration, type-I and
type-II staircase detection, nontrivial submatrices and checkerboard signs.
"""

import enum
from dataclasses import dataclass
from itertools import combinations

from .exceptions import DimensionMismatchError, IndexOutOfRangeError
from .exact import index_set


class StaircaseType(enum.Enum):
    TYPE_I = "type-I"
    TYPE_II = "type-II"
    BOTH = "both"
    NEITHER = "neither"

    def flip(self):
        """Staircase type of P_n A given the type of A."""
        return {
            StaircaseType.TYPE_I: StaircaseType.TYPE_II,
            StaircaseType.TYPE_II: StaircaseType.TYPE_I,
        }.get(self, self)

    @property
    def includes_type_i(self):
        return self in (StaircaseType.TYPE_I, StaircaseType.BOTH)

    @property
    def includes_type_ii(self):
        return self in (StaircaseType.TYPE_II, StaircaseType.BOTH)


class Checkerboard(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class ZeroPattern:
    """Nonzero mask of a matrix; ``mask[i-1][j-1]`` is True where a_ij != 0."""

    n: int
    mask: tuple

    def __str__(self):
        return "\n".join("".join("*" if x else "0" for x in row) for row in self.mask)


def enumerate_index_sets(k, n):
    """
    All strictly increasing k-tuples from 1..n in lexicographic order.
    """
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"k={k} must satisfy 1 <= k <= n={n}")
    return list(combinations(range(1, n + 1), k))


def _nonzero(a):
    return [[x != 0 for x in row] for row in a.rows]


def is_type_i_staircase(a):
    """
    Nonzero diagonal, and zeros below (above) the diagonal fill the rectangle to
    their lower left (upper right).

    Checked locally: a zero strictly below the diagonal must have zeros directly
    beneath and directly to its left; a zero strictly above must have zeros
    directly above and directly to its right. Those steps stay on the same side
    of the diagonal, so they generate the whole rectangle.
    """
    nz = _nonzero(a)
    n = a.n
    if not all(nz[i][i] for i in range(n)):
        return False
    for i in range(n):
        for j in range(n):
            if nz[i][j]:
                continue
            if i > j:
                if i + 1 < n and nz[i + 1][j]:
                    return False
                if j > 0 and nz[i][j - 1]:
                    return False
            elif i < j:
                if i > 0 and nz[i - 1][j]:
                    return False
                if j + 1 < n and nz[i][j + 1]:
                    return False
    return True


def is_type_ii_staircase(a):
    """
    Nonzero backward diagonal, with the mirrored zero-propagation rules: zeros
    below the backward diagonal fill their lower right, zeros above it their
    upper left.
    """
    nz = _nonzero(a)
    n = a.n
    if not all(nz[i][n - 1 - i] for i in range(n)):
        return False
    for i in range(n):
        for j in range(n):
            if nz[i][j]:
                continue
            if i + j > n - 1:
                if i + 1 < n and nz[i + 1][j]:
                    return False
                if j + 1 < n and nz[i][j + 1]:
                    return False
            elif i + j < n - 1:
                if i > 0 and nz[i - 1][j]:
                    return False
                if j > 0 and nz[i][j - 1]:
                    return False
    return True


def is_type_i_staircase_literal(a):
    """Quantifier-by-quantifier type-I test, O(n^4)."""
    nz = _nonzero(a)
    n = a.n
    if not all(nz[i][i] for i in range(n)):
        return False
    for i in range(n):
        for j in range(n):
            if nz[i][j] or i == j:
                continue
            if i > j:
                rect = ((k, l) for k in range(i, n) for l in range(j + 1))
            else:
                rect = ((k, l) for k in range(i + 1) for l in range(j, n))
            if any(nz[k][l] for k, l in rect):
                return False
    return True


def is_type_ii_staircase_literal(a):
    """Quantifier-by-quantifier type-II test, O(n^4)."""
    nz = _nonzero(a)
    n = a.n
    if not all(nz[i][n - 1 - i] for i in range(n)):
        return False
    for i in range(n):
        for j in range(n):
            if nz[i][j] or i + j == n - 1:
                continue
            if i + j > n - 1:
                rect = ((k, l) for k in range(i, n) for l in range(j, n))
            else:
                rect = ((k, l) for k in range(i + 1) for l in range(j + 1))
            if any(nz[k][l] for k, l in rect):
                return False
    return True


def staircase_type(a):
    type_i = is_type_i_staircase(a)
    type_ii = is_type_ii_staircase(a)
    if type_i and type_ii:
        return StaircaseType.BOTH
    if type_i:
        return StaircaseType.TYPE_I
    if type_ii:
        return StaircaseType.TYPE_II
    return StaircaseType.NEITHER


def is_nontrivial(a, rows, cols, kind):
    """
    A[rows|cols] is nontrivial for a type-I (type-II) staircase when its main
    (backward) diagonal has no zero entry.
    """
    rows = index_set(rows, a.n)
    cols = index_set(cols, a.n)
    if len(rows) != len(cols):
        raise DimensionMismatchError("nontrivial submatrices are square")
    return _is_nontrivial(a.rows, rows, cols, kind)


def _is_nontrivial(entries, rows, cols, kind):
    if kind is StaircaseType.TYPE_I:
        pairs = zip(rows, cols)
    elif kind is StaircaseType.TYPE_II:
        pairs = zip(rows, reversed(cols))
    else:
        raise ValueError(f"nontrivial submatrices need type-I or type-II, not {kind}")
    return all(entries[i - 1][j - 1] != 0 for i, j in pairs)


def checkerboard_class(a):
    """
    PLUS when sign(a_ij) = (-1)^(i+j) or a_ij = 0 everywhere, MINUS when -A has
    that pattern, BOTH only for the zero matrix.
    """
    plus = minus = True
    for i, j, value in a.entries():
        if value == 0:
            continue
        if (value > 0) == ((i + j) % 2 == 0):
            minus = False
        else:
            plus = False
    if plus and minus:
        return Checkerboard.BOTH
    if plus:
        return Checkerboard.PLUS
    if minus:
        return Checkerboard.MINUS
    return Checkerboard.NEITHER


def zero_pattern(a):
    return ZeroPattern(a.n, tuple(tuple(row) for row in _nonzero(a)))


def patterns_equal(p, q):
    if p.n != q.n:
        raise DimensionMismatchError(f"pattern orders differ: {p.n} and {q.n}")
    return p.mask == q.mask


def pattern_differences(p, q):
    """1-based positions where the two patterns disagree."""
    if p.n != q.n:
        raise DimensionMismatchError(f"pattern orders differ: {p.n} and {q.n}")
    return [
        (i + 1, j + 1)
        for i in range(p.n)
        for j in range(p.n)
        if p.mask[i][j] != q.mask[i][j]
    ]
