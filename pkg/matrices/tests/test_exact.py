import random
from decimal import Decimal
from fractions import Fraction

from django.test import SimpleTestCase

from matrices.exact import (
    RMatrix,
    absolute,
    alternating_sign,
    backward_identity,
    complementary_minor,
    det,
    det_cofactor,
    diagonal,
    identity,
    inverse,
    minor,
    permutation_matrix,
    submatrix,
    to_rational,
)
from matrices.exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    MatrixParseError,
    SingularMatrixError,
)

A1 = RMatrix([[-1, -3, -5], [-1, -6, -10], [-1, -15, -29]])
A5 = RMatrix([["-0.00001", -1, -1], [-2, -5, -2], [-3, -1, 0]])


def random_matrix(rng, n, lo=-6, hi=6):
    return RMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


class RationalConversionTests(SimpleTestCase):
    def test_decimal_strings_are_exact(self):
        """Test that decimal strings convert without rounding"""
        self.assertEqual(to_rational("-0.00001"), Fraction(-1, 100000))
        self.assertEqual(to_rational(Decimal("0.1")), Fraction(1, 10))
        self.assertEqual(to_rational("19/4"), Fraction(19, 4))

    def test_floats_are_refused(self):
        """Test that float entries raise TypeError"""
        with self.assertRaises(TypeError):
            to_rational(0.1)

    def test_malformed_string(self):
        """Test that garbage strings raise a parse error"""
        with self.assertRaises(MatrixParseError):
            to_rational("1/0")
        with self.assertRaises(MatrixParseError):
            to_rational("three")


class RMatrixTests(SimpleTestCase):
    def test_indexing_is_one_based(self):
        """Test 1-based access and range checks"""
        self.assertEqual(A1[1, 1], -1)
        self.assertEqual(A1[3, 2], -15)
        with self.assertRaises(IndexOutOfRangeError):
            A1[0, 1]
        with self.assertRaises(IndexOutOfRangeError):
            A1[1, 4]

    def test_non_square_rows_rejected(self):
        """Test that ragged or rectangular input is refused"""
        with self.assertRaises(DimensionMismatchError):
            RMatrix([[1, 2], [3]])
        with self.assertRaises(DimensionMismatchError):
            RMatrix([[1, 2, 3], [4, 5, 6]])

    def test_immutable(self):
        """Test that matrices cannot be modified"""
        with self.assertRaises(AttributeError):
            A1._rows = ()

    def test_equality_and_hash(self):
        """Test value equality across entry types"""
        same = RMatrix([["-1", -3, "-5/1"], [-1, -6, -10], [-1, -15, -29]])
        self.assertEqual(A1, same)
        self.assertEqual(hash(A1), hash(same))

    def test_backward_identity_reverses_rows(self):
        """Test that P_n A reverses the row order"""
        flipped = backward_identity(3) @ A1
        self.assertEqual(flipped.rows, tuple(reversed(A1.rows)))

    def test_alternating_sign_conjugation(self):
        """Test that S_n A S_n flips the sign of entries with odd i + j"""
        s = alternating_sign(3)
        conjugated = s @ A1 @ s
        for i, j, value in A1.entries():
            self.assertEqual(conjugated[i, j], (-1) ** (i + j) * value)

    def test_permutation_matrix(self):
        """Test permutation matrix placement and validation"""
        p = permutation_matrix((2, 3, 1))
        self.assertEqual(p[1, 2], 1)
        self.assertEqual(p[3, 1], 1)
        with self.assertRaises(IndexOutOfRangeError):
            permutation_matrix((1, 1, 2))

    def test_absolute_and_transpose(self):
        """Test entrywise absolute value and transposition"""
        self.assertEqual(absolute(A1)[3, 3], 29)
        self.assertEqual(A1.transpose()[1, 3], A1[3, 1])
        self.assertEqual(-(-A1), A1)


class DeterminantTests(SimpleTestCase):
    def test_reference_determinants(self):
        """Test determinants of known matrices"""
        self.assertEqual(det(A1), -12)
        self.assertEqual(det(A5), Fraction(350001, 50000))
        self.assertEqual(det(identity(5)), 1)
        self.assertEqual(det(diagonal([2, "1/3", -3])), -2)

    def test_bareiss_matches_laplace(self):
        """Test the elimination determinant against cofactor expansion"""
        rng = random.Random(11)
        for trial in range(30):
            n = rng.randint(1, 5)
            a = random_matrix(rng, n).map(lambda x: x / rng.choice((1, 2, 3, 7)))
            with self.subTest(trial=trial, n=n):
                self.assertEqual(det(a), det_cofactor(a))

    def test_determinant_is_multiplicative(self):
        """Test det(AB) = det(A) det(B) on random rational pairs"""
        rng = random.Random(13)
        for trial in range(50):
            n = rng.randint(1, 6)
            a = random_matrix(rng, n).map(lambda x: x / rng.choice((1, 2, 5)))
            b = random_matrix(rng, n).map(lambda x: x / rng.choice((1, 3, 4)))
            with self.subTest(trial=trial, n=n):
                self.assertEqual(det(a @ b), det(a) * det(b))

    def test_singular_determinant(self):
        """Test that a rank-deficient matrix has determinant zero"""
        self.assertEqual(det(RMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 5]])), 0)

    def test_minors(self):
        """Test minors and complementary minors"""
        self.assertEqual(complementary_minor(A1, 1, 1), 24)
        self.assertEqual(complementary_minor(A1, 3, 1), 0)
        self.assertEqual(minor(A1, (1, 2), (1, 2)), 3)
        self.assertEqual(minor(A1, (1, 2, 3), (1, 2, 3)), det(A1))
        self.assertEqual(det(submatrix(A1, (2, 3), (2, 3))), 24)

    def test_complementary_minor_of_scalar(self):
        """Test that the empty complementary minor is 1"""
        self.assertEqual(complementary_minor(RMatrix([[5]]), 1, 1), 1)

    def test_submatrix_validation(self):
        """Test that index sets must be increasing and square"""
        with self.assertRaises(IndexOutOfRangeError):
            submatrix(A1, (2, 1), (1, 2))
        with self.assertRaises(DimensionMismatchError):
            submatrix(A1, (1, 2), (1,))


class InverseTests(SimpleTestCase):
    def test_both_methods_invert(self):
        """Test that adjugate and elimination inverses agree and invert"""
        rng = random.Random(5)
        checked = 0
        while checked < 15:
            a = random_matrix(rng, rng.randint(1, 5))
            if det(a) == 0:
                continue
            checked += 1
            adj = inverse(a, method="adjugate")
            elim = inverse(a, method="elimination")
            with self.subTest(matrix=a):
                self.assertEqual(adj, elim)
                self.assertEqual(a @ adj, identity(a.n))

    def test_singular_inverse(self):
        """Test that inverting a singular matrix raises"""
        singular = RMatrix([[1, 1], [1, 1]])
        for method in ("adjugate", "elimination"):
            with self.subTest(method=method):
                with self.assertRaises(SingularMatrixError):
                    inverse(singular, method=method)

    def test_unknown_method(self):
        """Test that an unknown inverse method is rejected"""
        with self.assertRaises(ValueError):
            inverse(A1, method="qr")
