import random

from django.test import SimpleTestCase

from matrices.classify import is_assr, is_signed_diagonal
from matrices.combined import combined
from matrices.exact import RMatrix, backward_identity, det, identity
from matrices.exceptions import PreconditionError
from matrices.fixtures import (
    A1,
    A2,
    A3,
    A5,
    backward_identity_fixture,
    get_fixture,
    identity_fixture,
    reference_fixtures,
)
from matrices.gen import (
    SCALE_VALUES,
    flipped_signed_diagonal,
    random_nonsingular_diagonal,
    random_permutation_matrix,
    random_staircase_mask,
    sample_assr,
    scale_perturb,
    signed_diagonal,
)
from matrices.patterns import StaircaseType, checkerboard_class, is_type_i_staircase


class FixtureTests(SimpleTestCase):
    def test_six_fixtures(self):
        """Test the reference fixture set and lookup"""
        self.assertEqual(
            [f.id for f in reference_fixtures()], ["A1", "A2", "A3", "A4", "A5", "A6"]
        )
        self.assertIs(get_fixture("A3"), A3)
        with self.assertRaises(KeyError):
            get_fixture("A7")

    def test_exact_decimal_entry(self):
        """Test that the A5 decimal entry is parsed exactly"""
        self.assertEqual(str(A5.matrix[1, 1]), "-1/100000")

    def test_a2_shape(self):
        """Test that A2 is 6x6"""
        self.assertEqual(A2.matrix.n, 6)

    def test_combined_facts(self):
        """Test the recorded facts about each combined matrix"""
        for fixture in reference_fixtures():
            c = combined(fixture.matrix).matrix
            expected = fixture.expected
            with self.subTest(fixture=fixture.id):
                self.assertEqual(checkerboard_class(c), expected.combined_checkerboard)
                if expected.combined_is_assr is not None:
                    self.assertEqual(is_assr(c).is_assr, expected.combined_is_assr)

    def test_auxiliary_families(self):
        """Test I_n and P_n fixtures"""
        self.assertEqual(identity_fixture(3), identity(3))
        self.assertEqual(combined(backward_identity_fixture(4)).matrix, backward_identity(4))


class ScalingTests(SimpleTestCase):
    def test_scale_perturb_keeps_combined(self):
        """Test that positive diagonal scaling leaves C(A) unchanged"""
        for seed in range(5):
            with self.subTest(seed=seed):
                scaled = scale_perturb(A1.matrix, seed)
                self.assertEqual(combined(scaled).matrix, combined(A1.matrix).matrix)

    def test_scale_perturb_is_seeded(self):
        """Test that equal seeds give equal matrices"""
        self.assertEqual(scale_perturb(A2.matrix, 4), scale_perturb(A2.matrix, 4))

    def test_scale_perturb_keeps_classification(self):
        """Test that positive scaling preserves ASSR and the signature"""
        original = is_assr(A5.matrix)
        scaled = is_assr(scale_perturb(A5.matrix, 9))
        self.assertTrue(scaled.is_assr)
        self.assertEqual(scaled.signature, original.signature)

    def test_signed_diagonals(self):
        """Test D_n and P_n D_n generators"""
        rng = random.Random(2)
        for trial in range(10):
            d = signed_diagonal(4, rng)
            flipped = flipped_signed_diagonal(4, rng)
            with self.subTest(trial=trial):
                self.assertTrue(is_signed_diagonal(d))
                self.assertTrue(is_signed_diagonal(backward_identity(4) @ flipped))
                self.assertTrue(all(abs(d[i, i]) in SCALE_VALUES for i in range(1, 5)))

    def test_random_diagonal_and_permutation(self):
        """Test that random scalings and permutations are nonsingular"""
        rng = random.Random(8)
        for _ in range(10):
            self.assertNotEqual(det(random_nonsingular_diagonal(rng, 3)), 0)
            self.assertIn(det(random_permutation_matrix(rng, 3)), (1, -1))


class SamplerTests(SimpleTestCase):
    def test_masks_are_type_i(self):
        """Test that generated masks are type-I staircase patterns"""
        rng = random.Random(31)
        for trial in range(50):
            n = rng.randint(1, 6)
            a = RMatrix([[int(x) for x in row] for row in random_staircase_mask(rng, n)])
            with self.subTest(trial=trial):
                self.assertTrue(is_type_i_staircase(a))

    def test_samples_are_assr(self):
        """Test that every accepted matrix is ASSR"""
        for n in (2, 3, 4):
            for index, a in enumerate(sample_assr(n, trials=30, seed=5)):
                with self.subTest(n=n, index=index):
                    result = is_assr(a)
                    self.assertTrue(result.is_assr)
                    self.assertNotEqual(result.staircase, StaircaseType.NEITHER)

    def test_order_two_yield(self):
        """Test that most order-2 candidates are accepted"""
        self.assertGreater(len(sample_assr(2, trials=20, seed=0)), 10)

    def test_reproducible(self):
        """Test that sampling is determined by the seed"""
        self.assertEqual(
            sample_assr(3, trials=15, seed=12), sample_assr(3, trials=15, seed=12)
        )

    def test_order_range(self):
        """Test that orders outside 2..6 are refused"""
        with self.assertRaises(PreconditionError):
            sample_assr(1, trials=1, seed=0)
        with self.assertRaises(PreconditionError):
            sample_assr(7, trials=1, seed=0)
