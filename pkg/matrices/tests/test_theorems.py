import random

from django.test import SimpleTestCase

from matrices.classify import is_assr
from matrices.exact import RMatrix, backward_identity, diagonal, identity
from matrices.exceptions import SingularMatrixError
from matrices.fixtures import A1, A2, A3, A4, A5, A6, reference_fixtures
from matrices.gen import (
    flipped_signed_diagonal,
    sample_assr,
    scale_perturb,
    signed_diagonal,
)
from matrices.theorems import (
    CHECK_IDS,
    MatrixFacts,
    Status,
    Verdict,
    VerifyConfig,
    check_checkerboard,
    check_lemma_invariances,
    check_row_col_sums,
    check_signature_laws,
    check_sr_combined_equivalence,
    check_staircase_preservation,
    check_zero_pattern_equivalence,
    explore_abs_combined,
    run_all_checks,
)


class VerdictTests(SimpleTestCase):
    def test_fails_needs_witness(self):
        """Test that a failing verdict cannot be built without a witness"""
        with self.assertRaises(ValueError):
            Verdict(Status.FAILS)
        self.assertEqual(Verdict.fails({"x": 1}).witness, {"x": 1})


class ZeroPatternTests(SimpleTestCase):
    def test_holds_on_irreducible_assr(self):
        """Test zero pattern equality on A2, A5 and A6"""
        for fixture in (A2, A5, A6):
            report = check_zero_pattern_equivalence(fixture.matrix)
            with self.subTest(fixture=fixture.id):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertTrue(report.facts["patterns_equal"])

    def test_type_ii_branch(self):
        """Test that A5 goes through the P_n A branch"""
        report = check_zero_pattern_equivalence(A5.matrix)
        self.assertIn("type-II", report.facts["branch"])

    def test_reducible_counterexample(self):
        """Test that A3 is out of scope and its patterns really differ"""
        report = check_zero_pattern_equivalence(A3.matrix)
        self.assertEqual(report.verdict.status, Status.PRECONDITION_NOT_MET)
        self.assertFalse(report.facts["patterns_equal"])

    def test_non_assr_counterexample(self):
        """Test that A1 is out of scope and its patterns really differ"""
        report = check_zero_pattern_equivalence(A1.matrix)
        self.assertEqual(report.verdict.status, Status.PRECONDITION_NOT_MET)
        self.assertFalse(report.facts["patterns_equal"])


class StaircasePreservationTests(SimpleTestCase):
    def test_holds_on_assr(self):
        """Test that ASSR fixtures keep their staircase type"""
        for fixture in (A2, A3, A5, A6):
            with self.subTest(fixture=fixture.id):
                report = check_staircase_preservation(fixture.matrix)
                self.assertEqual(report.verdict.status, Status.HOLDS)

    def test_a4_counterexample(self):
        """Test that C(A4) loses the type-I staircase of A4"""
        report = check_staircase_preservation(A4.matrix)
        self.assertEqual(report.verdict.status, Status.PRECONDITION_NOT_MET)
        self.assertEqual(report.facts["combined_staircase"], "neither")


class SrCombinedTests(SimpleTestCase):
    def test_all_false_on_fixtures(self):
        """Test that the four conditions are all false for the fixtures"""
        for fixture in reference_fixtures():
            report = check_sr_combined_equivalence(fixture.matrix)
            with self.subTest(fixture=fixture.id):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertFalse(report.facts["combined_nonnegative"])

    def test_all_true_on_signed_diagonals(self):
        """Test that the conditions are all true for D_n and P_n D_n"""
        d = diagonal([-1, -2, -4])
        for a in (d, backward_identity(3) @ d, identity(4)):
            report = check_sr_combined_equivalence(a)
            with self.subTest(matrix=a):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertTrue(report.facts["combined_is_sr"])

    def test_random_monomials(self):
        """Test that the four conditions agree on random D_n and P_n D_n"""
        rng = random.Random(17)
        for trial in range(200):
            n = rng.randint(1, 5)
            make = rng.choice((signed_diagonal, flipped_signed_diagonal))
            report = check_sr_combined_equivalence(make(n, rng))
            with self.subTest(trial=trial):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertTrue(report.facts["combined_is_identity_or_backward"])

    def test_random_scaled_fixtures(self):
        """Test that the four conditions agree on scaled and flipped fixtures"""
        rng = random.Random(23)
        sources = [f.matrix for f in reference_fixtures() if f.matrix.n <= 5]
        for trial in range(200):
            a = scale_perturb(rng.choice(sources), rng.randrange(10**6))
            if rng.random() < 0.5:
                a = backward_identity(a.n) @ a
            report = check_sr_combined_equivalence(a)
            with self.subTest(trial=trial):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertFalse(report.facts["combined_is_sr"])

    def test_not_sr(self):
        """Test that a non-SR matrix is out of scope"""
        report = check_sr_combined_equivalence(RMatrix([[1, -1], [1, 1]]))
        self.assertEqual(report.verdict.status, Status.PRECONDITION_NOT_MET)

    def test_reducible_identity_combined(self):
        """Test triangular and reducible SR matrices whose C(A) is I_n or P_n"""
        upper = RMatrix([[1, 1], [0, 1]])
        cases = (
            upper,
            backward_identity(2) @ upper,
            RMatrix([[3, 4, 0], [0, 9, 0], [0, 4, 7]]),
        )
        for a in cases:
            report = check_sr_combined_equivalence(a)
            with self.subTest(matrix=a):
                self.assertEqual(report.verdict.status, Status.PRECONDITION_NOT_MET)
                self.assertTrue(report.facts["combined_is_identity_or_backward"])
                self.assertFalse(report.facts["signed_diagonal_or_flipped"])
                self.assertFalse(report.failed)


class InvarianceTests(SimpleTestCase):
    def test_fixtures(self):
        """Test scaling and permutation invariances on the fixtures"""
        for fixture in (A1, A3, A4, A5):
            report = check_lemma_invariances(fixture.matrix, trials=10, seed=3)
            with self.subTest(fixture=fixture.id):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertEqual(report.seed, 3)
                self.assertEqual(report.facts["trials"], 10)

    def test_singular_raises(self):
        """Test that the invariance check needs a nonsingular matrix"""
        with self.assertRaises(SingularMatrixError):
            check_lemma_invariances(RMatrix([[1, 2], [2, 4]]), trials=1, seed=0)


class SignatureLawCheckTests(SimpleTestCase):
    def test_fixtures(self):
        """Test both signature laws on the fixtures"""
        for fixture in reference_fixtures():
            report = check_signature_laws(fixture.matrix)
            with self.subTest(fixture=fixture.id):
                self.assertEqual(report.verdict.status, Status.HOLDS)
        self.assertEqual(
            check_signature_laws(A4.matrix).facts["branches"], ["conjugated inverse"]
        )


class CheckerboardAndSumTests(SimpleTestCase):
    def test_checkerboard_classes(self):
        """Test the checkerboard class of every fixture's combined matrix"""
        for fixture in reference_fixtures():
            report = check_checkerboard(fixture.matrix)
            with self.subTest(fixture=fixture.id):
                self.assertEqual(report.verdict.status, Status.HOLDS)
                self.assertEqual(
                    report.facts["combined_checkerboard"],
                    fixture.expected.combined_checkerboard.value,
                )

    def test_row_col_sums(self):
        """Test unit sums and zero inheritance"""
        for fixture in reference_fixtures():
            with self.subTest(fixture=fixture.id):
                self.assertEqual(
                    check_row_col_sums(fixture.matrix).verdict.status, Status.HOLDS
                )

    def test_singular(self):
        """Test that a singular matrix is out of scope"""
        report = check_row_col_sums(RMatrix([[1, 1], [1, 1]]))
        self.assertEqual(report.verdict.status, Status.PRECONDITION_NOT_MET)


class AbsCombinedTests(SimpleTestCase):
    def test_a5_abs_is_assr(self):
        """Test that |C(A5)| is ASSR type-II"""
        report = explore_abs_combined(A5.matrix)
        self.assertEqual(report.verdict.status, Status.HOLDS)
        self.assertTrue(report.facts["abs_is_assr"])
        self.assertEqual(report.facts["abs_assr_signature"], "(+1,-1,-1)")
        self.assertEqual(report.facts["abs_staircase"], "type-II")
        self.assertEqual(report.facts["conjugation_order"], 3)

    def test_a6_abs_not_sr(self):
        """Test that |C(A6)| is not SR and carries a witness pair"""
        report = explore_abs_combined(A6.matrix)
        self.assertEqual(report.verdict.status, Status.HOLDS)
        self.assertFalse(report.facts["abs_is_sr"])
        witness = report.facts["abs_sr_witness"]
        self.assertEqual(witness["order"], 2)
        self.assertIn("partner", witness)

    def test_conjugation_identity(self):
        """Test |C(A)| = +-S_n C(A) S_n for checkerboard combined matrices"""
        for fixture in reference_fixtures():
            with self.subTest(fixture=fixture.id):
                self.assertTrue(
                    explore_abs_combined(fixture.matrix).facts["abs_equals_conjugated"]
                )


class RunAllChecksTests(SimpleTestCase):
    def test_no_fails_on_fixtures(self):
        """Test that no check fails on the fixtures"""
        config = VerifyConfig(seed=1, trials=5)
        for fixture in reference_fixtures():
            reports = run_all_checks(fixture.matrix, config)
            with self.subTest(fixture=fixture.id):
                self.assertEqual([r.check_id for r in reports], list(CHECK_IDS))
                self.assertFalse(any(r.failed for r in reports))

    def test_singular_input(self):
        """Test that singular input yields precondition verdicts, not errors"""
        reports = run_all_checks(RMatrix([[1, 2], [2, 4]]), VerifyConfig(trials=2))
        by_id = {r.check_id: r for r in reports}
        self.assertEqual(
            by_id["lemma_invariances"].verdict.status, Status.PRECONDITION_NOT_MET
        )
        self.assertEqual(
            by_id["abs_combined"].verdict.status, Status.PRECONDITION_NOT_MET
        )
        self.assertFalse(any(r.failed for r in reports))

    def test_generated_assr_matrices(self):
        """Test that no check fails on 200 generated ASSR matrices of order 2 to 6"""
        pool = [f.matrix for f in (A2, A3, A5, A6)]
        for n in range(2, 7):
            pool.append(RMatrix([[i**j for j in range(n)] for i in range(1, n + 1)]))
            pool.extend(sample_assr(n, trials=40, seed=100 * n))
        generated = list(pool)
        index = 0
        while len(generated) < 200:
            a = scale_perturb(pool[index % len(pool)], index)
            if index % 2:
                a = backward_identity(a.n) @ a
            generated.append(a)
            index += 1
        self.assertEqual({a.n for a in generated}, {2, 3, 4, 5, 6})
        for index, a in enumerate(generated):
            with self.subTest(index=index, matrix=a):
                self.assertTrue(is_assr(a).is_assr)
                reports = run_all_checks(a, VerifyConfig(seed=index, trials=50))
                self.assertFalse([r.check_id for r in reports if r.failed])

    def test_shared_facts(self):
        """Test that checks accept precomputed facts"""
        facts = MatrixFacts(A2.matrix)
        self.assertEqual(
            check_checkerboard(facts).facts["combined_checkerboard"], "minus"
        )
        self.assertIn("combined", facts.__dict__)
