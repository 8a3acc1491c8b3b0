"""
Executable checks of the combined-matrix results for sign regular matrices.

Each check returns a :class:`CheckReport` whose verdict is HOLDS, FAILS (with a
witness) or PRECONDITION_NOT_MET. The results are proved, so a FAILS on an
input that meets the hypothesis means an arithmetic or classification bug.
Matrices that show a hypothesis is necessary report PRECONDITION_NOT_MET.
"""

import enum
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property

from .classify import (
    is_assr,
    is_irreducible,
    is_signed_diagonal,
    signature_of_conjugated_inverse,
    signature_of_pn_a,
    sr_signature,
)
from .combined import combined, combined_via_inverse, row_col_sums
from .conf import resolve
from .exact import (
    absolute,
    alternating_sign,
    backward_identity,
    det,
    identity,
    inverse,
)
from .exceptions import SingularMatrixError
from .gen import random_nonsingular_diagonal, random_permutation_matrix
from .patterns import (
    Checkerboard,
    checkerboard_class,
    is_type_i_staircase,
    is_type_ii_staircase,
    pattern_differences,
    staircase_type,
    zero_pattern,
)

logger = logging.getLogger(__name__)


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    PRECONDITION_NOT_MET = "precondition-not-met"


@dataclass(frozen=True)
class Verdict:
    status: Status
    note: str = ""
    witness: dict | None = None

    def __post_init__(self):
        if self.status is Status.FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @classmethod
    def holds(cls, note=""):
        return cls(Status.HOLDS, note)

    @classmethod
    def fails(cls, witness, note=""):
        return cls(Status.FAILS, note, witness)

    @classmethod
    def not_met(cls, note):
        return cls(Status.PRECONDITION_NOT_MET, note)


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    verdict: Verdict
    facts: dict = field(default_factory=dict)
    seed: int | None = None

    @property
    def failed(self):
        return self.verdict.status is Status.FAILS


@dataclass(frozen=True)
class VerifyConfig:
    seed: int | None = None
    trials: int | None = None
    max_order: int | None = None

    @property
    def resolved_seed(self):
        return resolve("SEED", self.seed)

    @property
    def resolved_trials(self):
        return resolve("TRIALS", self.trials)


class MatrixFacts:
    """
    Lazily computed facts about one matrix, shared by the checks of a run.
    """

    def __init__(self, matrix, max_order=None):
        self.matrix = matrix
        self.max_order = max_order

    @cached_property
    def n(self):
        return self.matrix.n

    @cached_property
    def nonsingular(self):
        return det(self.matrix) != 0

    @cached_property
    def sr(self):
        return sr_signature(self.matrix, self.max_order)

    @cached_property
    def assr(self):
        return is_assr(self.matrix, self.max_order)

    @cached_property
    def staircase(self):
        return staircase_type(self.matrix)

    @cached_property
    def irreducible(self):
        return is_irreducible(self.matrix)

    @cached_property
    def combined(self):
        return combined(self.matrix).matrix

    @cached_property
    def backward(self):
        return backward_identity(self.n)

    def summary(self):
        facts = {
            "staircase": self.staircase.value,
            "irreducible": self.irreducible,
            "nonsingular": self.nonsingular,
        }
        if self.assr.is_assr:
            facts["signature"] = str(self.assr.signature)
        elif self.sr.is_sr:
            facts["signature"] = str(self.sr.signature)
        return facts


def _facts_for(a, max_order=None):
    return a if isinstance(a, MatrixFacts) else MatrixFacts(a, max_order)


def minor_witness_data(witness):
    if witness is None:
        return None
    data = {
        "order": witness.order,
        "rows": list(witness.rows),
        "cols": list(witness.cols),
        "value": str(witness.value),
        "reason": witness.reason,
    }
    if witness.partner is not None:
        data["partner"] = minor_witness_data(witness.partner)
    return data


def _report(check_id, verdict, facts, seed=None):
    if verdict.status is Status.FAILS:
        logger.warning("check %s failed: %s %s", check_id, verdict.note, verdict.witness)
    return CheckReport(check_id, verdict, facts, seed)


def check_zero_pattern_equivalence(a, max_order=None):
    """
    An ASSR matrix that is irreducible type-I staircase, or type-II staircase
    with P_n A irreducible, has the same zero pattern as its combined matrix.
    """
    check_id = "zero_pattern_equivalence"
    f = _facts_for(a, max_order)
    facts = f.summary()
    if not f.nonsingular:
        return _report(check_id, Verdict.not_met("matrix is singular"), facts)
    differences = pattern_differences(zero_pattern(f.matrix), zero_pattern(f.combined))
    facts["patterns_equal"] = not differences
    if not f.assr.is_assr:
        return _report(check_id, Verdict.not_met("matrix is not ASSR"), facts)
    if f.staircase.includes_type_i and f.irreducible:
        branch = "irreducible type-I staircase"
    elif f.staircase.includes_type_ii and is_irreducible(f.backward @ f.matrix):
        branch = "type-II staircase with P_n A irreducible"
    else:
        return _report(check_id, Verdict.not_met("matrix is reducible"), facts)
    facts["branch"] = branch
    if differences:
        witness = {"positions": [list(p) for p in differences]}
        return _report(check_id, Verdict.fails(witness, "zero patterns differ"), facts)
    return _report(check_id, Verdict.holds(branch), facts)


def check_staircase_preservation(a, max_order=None):
    """The staircase type of an ASSR matrix carries over to C(A)."""
    check_id = "staircase_preservation"
    f = _facts_for(a, max_order)
    facts = f.summary()
    if not f.nonsingular:
        return _report(check_id, Verdict.not_met("matrix is singular"), facts)
    facts["combined_staircase"] = staircase_type(f.combined).value
    if not f.assr.is_assr:
        return _report(check_id, Verdict.not_met("matrix is not ASSR"), facts)
    lost = []
    if f.staircase.includes_type_i and not is_type_i_staircase(f.combined):
        lost.append("type-I")
    if f.staircase.includes_type_ii and not is_type_ii_staircase(f.combined):
        lost.append("type-II")
    if lost:
        witness = {"lost": lost, "combined_staircase": facts["combined_staircase"]}
        return _report(
            check_id, Verdict.fails(witness, "combined matrix lost its staircase"), facts
        )
    return _report(check_id, Verdict.holds(f"{f.staircase.value} preserved"), facts)


def _triangular_identity_case(f, conditions):
    """(a), (b) and (d) hold but A is not monomial, with A or P_n A reducible."""
    if conditions["signed_diagonal_or_flipped"]:
        return False
    others = (
        conditions["combined_is_sr"],
        conditions["combined_nonnegative"],
        conditions["combined_is_identity_or_backward"],
    )
    if not all(others):
        return False
    return not f.irreducible or not is_irreducible(f.backward @ f.matrix)


def check_sr_combined_equivalence(a, max_order=None):
    """
    For a nonsingular SR matrix these agree: (a) C(A) is SR, (b) C(A) >= 0,
    (c) A = D_n or A = P_n D_n with D_n a one-signed diagonal, (d) C(A) is
    I_n or P_n.

    Reducible matrices such as triangular ones also have C(A) = I_n without
    being monomial; those report PRECONDITION_NOT_MET.
    """
    check_id = "sr_combined_equivalence"
    f = _facts_for(a, max_order)
    facts = f.summary()
    if not (f.nonsingular and f.sr.is_sr):
        return _report(check_id, Verdict.not_met("matrix is not nonsingular SR"), facts)
    c = f.combined
    conditions = {
        "combined_is_sr": bool(sr_signature(c, f.max_order).is_sr),
        "combined_nonnegative": all(value >= 0 for _, _, value in c.entries()),
        "signed_diagonal_or_flipped": is_signed_diagonal(f.matrix)
        or is_signed_diagonal(f.backward @ f.matrix),
        "combined_is_identity_or_backward": c in (identity(f.n), f.backward),
    }
    facts.update(conditions)
    if _triangular_identity_case(f, conditions):
        return _report(
            check_id,
            Verdict.not_met(
                "C(A) is I_n or P_n for a reducible matrix that is not D_n or P_n D_n"
            ),
            facts,
        )
    if len(set(conditions.values())) != 1:
        return _report(
            check_id, Verdict.fails(conditions, "conditions disagree"), facts
        )
    agreed = next(iter(conditions.values()))
    return _report(check_id, Verdict.holds(f"all four conditions {agreed}"), facts)


def check_lemma_invariances(a, trials=None, seed=None, max_order=None):
    """
    C(DAE) = C(A) for nonsingular diagonal D, E and C(PAQ) = P C(A) Q for
    permutation matrices P, Q, on ``trials`` random draws; C(A) has a positive
    entry; the cofactor and inverse routes agree.
    """
    check_id = "lemma_invariances"
    f = _facts_for(a, max_order)
    trials = resolve("TRIALS", trials)
    seed = resolve("SEED", seed)
    if not f.nonsingular:
        raise SingularMatrixError("lemma invariances need a nonsingular matrix")
    facts = f.summary()
    facts["trials"] = trials
    a_, c, n = f.matrix, f.combined, f.n
    s, p_n = alternating_sign(n), f.backward

    def fail(identity_name, **extra):
        witness = {"identity": identity_name, **extra}
        return _report(check_id, Verdict.fails(witness, identity_name), facts, seed)

    if combined_via_inverse(a_).matrix != c:
        return fail("cofactor route = inverse route")
    if not any(value > 0 for _, _, value in c.entries()):
        return fail("C(A) has a positive entry")
    fixed = {
        "C(-A) = C(A)": -a_,
        "C(S_n A) = C(A)": s @ a_,
        "C(A S_n) = C(A)": a_ @ s,
        "C(S_n A S_n) = C(A)": s @ a_ @ s,
    }
    for name, matrix in fixed.items():
        if combined(matrix).matrix != c:
            return fail(name)
    if combined(p_n @ a_).matrix != p_n @ c:
        return fail("C(P_n A) = P_n C(A)")

    rng = random.Random(seed)
    for trial in range(trials):
        d = random_nonsingular_diagonal(rng, n)
        e = random_nonsingular_diagonal(rng, n)
        if combined(d @ a_ @ e).matrix != c:
            return fail("C(DAE) = C(A)", trial=trial)
        p = random_permutation_matrix(rng, n)
        q = random_permutation_matrix(rng, n)
        c_pq = combined(p @ a_ @ q).matrix
        if c_pq != p @ c @ q:
            return fail("C(PAQ) = P C(A) Q", trial=trial)
        if not any(value > 0 for _, _, value in c_pq.entries()):
            return fail("C(PAQ) has a positive entry", trial=trial)
    return _report(check_id, Verdict.holds(f"{trials} random trials"), facts, seed)


def check_signature_laws(a, max_order=None):
    """
    Recompute the signatures of S_n A^-1 S_n (nonsingular SR) and P_n A (ASSR)
    and compare them with the closed-form predictions.
    """
    check_id = "signature_laws"
    f = _facts_for(a, max_order)
    facts = f.summary()
    mismatches = {}
    branches = []
    if f.nonsingular and f.sr.is_sr:
        branches.append("conjugated inverse")
        s = alternating_sign(f.n)
        predicted = signature_of_conjugated_inverse(f.sr.signature)
        observed = sr_signature(s @ inverse(f.matrix) @ s, f.max_order)
        facts["conjugated_inverse_signature"] = str(observed.signature)
        if not observed.is_sr or observed.signature != predicted:
            mismatches["conjugated inverse"] = {
                "predicted": str(predicted),
                "observed": str(observed.signature) if observed.is_sr else "not SR",
            }
    if f.assr.is_assr:
        branches.append("row reversal")
        predicted = signature_of_pn_a(f.assr.signature)
        flipped = is_assr(f.backward @ f.matrix, f.max_order)
        facts["row_reversed_signature"] = str(flipped.signature)
        if not flipped.is_assr or flipped.signature != predicted:
            mismatches["row reversal"] = {
                "predicted": str(predicted),
                "observed": str(flipped.signature) if flipped.is_assr else "not ASSR",
            }
    if not branches:
        return _report(
            check_id, Verdict.not_met("matrix is neither nonsingular SR nor ASSR"), facts
        )
    facts["branches"] = branches
    if mismatches:
        return _report(check_id, Verdict.fails(mismatches, "signature mismatch"), facts)
    return _report(check_id, Verdict.holds(", ".join(branches)), facts)


def check_checkerboard(a, max_order=None):
    """Either C(A) or -C(A) has a checkerboard pattern when A is nonsingular SR."""
    check_id = "checkerboard"
    f = _facts_for(a, max_order)
    facts = f.summary()
    if not (f.nonsingular and f.sr.is_sr):
        return _report(check_id, Verdict.not_met("matrix is not nonsingular SR"), facts)
    board = checkerboard_class(f.combined)
    facts["combined_checkerboard"] = board.value
    if board not in (Checkerboard.PLUS, Checkerboard.MINUS):
        witness = {"combined_checkerboard": board.value}
        return _report(check_id, Verdict.fails(witness, "no checkerboard pattern"), facts)
    return _report(check_id, Verdict.holds(board.value), facts)


def check_row_col_sums(a, max_order=None):
    """Rows and columns of C(A) sum to one, and a_ij = 0 forces c_ij = 0."""
    check_id = "row_col_sums"
    f = _facts_for(a, max_order)
    facts = f.summary()
    if not f.nonsingular:
        return _report(check_id, Verdict.not_met("matrix is singular"), facts)
    row_sums, col_sums = row_col_sums(f.combined)
    bad_rows = [i for i, s in enumerate(row_sums, start=1) if s != 1]
    bad_cols = [j for j, s in enumerate(col_sums, start=1) if s != 1]
    leaked = [
        [i, j]
        for i, j, value in f.matrix.entries()
        if value == 0 and f.combined[i, j] != 0
    ]
    if bad_rows or bad_cols or leaked:
        witness = {"rows": bad_rows, "cols": bad_cols, "nonzero_over_zero": leaked}
        return _report(check_id, Verdict.fails(witness, "elementary identity broken"), facts)
    return _report(check_id, Verdict.holds("all sums equal one"), facts)


def explore_abs_combined(a, max_order=None):
    """
    Classify |C(A)|. No general rule exists, so the verdict is informational
    and never FAILS.
    """
    check_id = "abs_combined"
    f = _facts_for(a, max_order)
    if not f.nonsingular:
        raise SingularMatrixError("|C(A)| needs a nonsingular matrix")
    facts = f.summary()
    c = f.combined
    magnitude = absolute(c)
    sr = sr_signature(magnitude, f.max_order)
    assr = is_assr(magnitude, f.max_order)
    s = alternating_sign(f.n)
    conjugated = s @ c @ s
    board = checkerboard_class(c)
    facts.update(
        {
            "abs_is_sr": sr.is_sr,
            "abs_signature": str(sr.signature) if sr.is_sr else None,
            "abs_is_assr": assr.is_assr,
            "abs_assr_signature": str(assr.signature) if assr.is_assr else None,
            "abs_staircase": assr.staircase.value,
            "abs_sr_witness": minor_witness_data(sr.sr_witness),
            "abs_equals_conjugated": magnitude in (conjugated, -conjugated),
            "conjugation_order": f.n,
            "combined_checkerboard": board.value,
        }
    )
    if sr.is_sr and assr.is_assr:
        note = "|C(A)| is ASSR"
    elif sr.is_sr:
        note = "|C(A)| is SR but not ASSR"
    else:
        note = "|C(A)| is not SR"
    return _report(check_id, Verdict.holds(note), facts)


CHECK_IDS = (
    "zero_pattern_equivalence",
    "staircase_preservation",
    "sr_combined_equivalence",
    "lemma_invariances",
    "signature_laws",
    "checkerboard",
    "row_col_sums",
    "abs_combined",
)


def run_all_checks(a, config=None):
    """
    Run the registry in ``CHECK_IDS`` order. Checks that cannot run on a
    singular matrix report PRECONDITION_NOT_MET instead of raising.
    """
    config = config or VerifyConfig()
    f = MatrixFacts(a, config.max_order)
    seed = config.resolved_seed
    registry = {
        "zero_pattern_equivalence": lambda: check_zero_pattern_equivalence(f),
        "staircase_preservation": lambda: check_staircase_preservation(f),
        "sr_combined_equivalence": lambda: check_sr_combined_equivalence(f),
        "lemma_invariances": lambda: check_lemma_invariances(
            f, trials=config.resolved_trials, seed=seed
        ),
        "signature_laws": lambda: check_signature_laws(f),
        "checkerboard": lambda: check_checkerboard(f),
        "row_col_sums": lambda: check_row_col_sums(f),
        "abs_combined": lambda: explore_abs_combined(f),
    }
    reports = []
    for check_id in CHECK_IDS:
        try:
            reports.append(registry[check_id]())
        except SingularMatrixError:
            reports.append(
                CheckReport(check_id, Verdict.not_met("matrix is singular"), f.summary())
            )
    return reports


__all__ = [
    "CHECK_IDS",
    "CheckReport",
    "MatrixFacts",
    "Status",
    "Verdict",
    "VerifyConfig",
    "check_checkerboard",
    "check_lemma_invariances",
    "check_row_col_sums",
    "check_signature_laws",
    "check_sr_combined_equivalence",
    "check_staircase_preservation",
    "check_zero_pattern_equivalence",
    "explore_abs_combined",
    "run_all_checks",
]
