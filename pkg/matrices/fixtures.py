"""
Reference matrices with their published classification and combined matrix.

Where only a rounded table of C(A) was published, ``combined_table`` holds it
as strings in units of ``10**table_scale_exponent``. Zeros in the table must be
exact zeros. Other entries must lie within one unit of the last printed digit
(the tables mix rounding and truncation) or within ``table_tolerance`` relative
to the printed value, whichever is larger.

The published A2 prints a_46 = -36. That matrix is not SR (the minor on rows
3, 4 and columns 5, 6 is -36 while the leading 2x2 minor is 2) and its
combined matrix does not match the published table. With a_46 = -60 the
matrix is ASSR with the published signature, det(A2) = -120, and C(A2)
reproduces every printed entry, so the fixture uses -60.
"""

from dataclasses import dataclass
from fractions import Fraction

from .classify import Signature
from .exact import RMatrix, backward_identity, identity
from .matrixio import parse_text
from .patterns import Checkerboard, StaircaseType


@dataclass(frozen=True)
class ExpectedFacts:
    is_sr: bool
    is_assr: bool
    staircase: StaircaseType
    signature: Signature
    irreducible: bool
    combined_checkerboard: Checkerboard
    combined_is_assr: bool | None = None
    combined_doubly_stochastic: bool | None = None


@dataclass(frozen=True)
class Fixture:
    id: str
    text: str
    expected: ExpectedFacts
    combined_exact: RMatrix | None = None
    combined_table: tuple | None = None
    table_scale_exponent: int = 0
    table_tolerance: Fraction = Fraction(5, 10000)
    note: str = ""

    @property
    def matrix(self):
        return parse_text(self.text)

    def table_matches(self, c):
        """True when every entry of C agrees with the printed table."""
        if self.combined_table is None:
            raise ValueError(f"fixture {self.id} has no printed table")
        unit = Fraction(10) ** self.table_scale_exponent
        return all(
            _entry_matches(value / unit, printed, self.table_tolerance)
            for row, printed_row in zip(c.rows, self.combined_table)
            for value, printed in zip(row, printed_row)
        )


def _entry_matches(value, printed, relative):
    expected = Fraction(printed)
    if expected == 0:
        return value == 0
    decimals = len(printed.partition(".")[2])
    allowed = max(Fraction(1, 10**decimals), relative * abs(expected))
    return abs(value - expected) <= allowed


A1 = Fixture(
    id="A1",
    text="""
# dense SR matrix that is not ASSR (A31 = 0)
-1  -3  -5
-1  -6 -10
-1 -15 -29
""",
    expected=ExpectedFacts(
        is_sr=True,
        is_assr=False,
        staircase=StaircaseType.BOTH,
        signature=Signature.of(-1, 1, -1),
        irreducible=True,
        combined_checkerboard=Checkerboard.PLUS,
    ),
    combined_exact=RMatrix(
        [
            [2, "-19/4", "15/4"],
            [-1, 12, -10],
            [0, "-25/4", "29/4"],
        ]
    ),
)

A2 = Fixture(
    id="A2",
    text="""
# irreducible type-I staircase ASSR matrix of order 6
# a_46 corrected from the published -36
-1  -2   0   0    0     0
-4 -10  -6  -8    0     0
 0 -10 -33 -46   -9    -6
 0 -16 -60 -92  -60   -60
 0  -2 -21 -70 -242  -443
 0   0   0 -36 -316 -2823
""",
    expected=ExpectedFacts(
        is_sr=True,
        is_assr=True,
        staircase=StaircaseType.TYPE_I,
        signature=Signature.of(-1, 1, -1, 1, -1, -1),
        irreducible=True,
        combined_checkerboard=Checkerboard.MINUS,
        combined_is_assr=False,
        combined_doubly_stochastic=False,
    ),
    combined_exact=RMatrix(
        [
            ["-3354447/5", "3354452/5", 0, 0, 0, 0],
            ["3354452/5", -838613, "8347522/5", "-7508904/5", 0, 0],
            [0, 317328, "-17372036/5", "16337038/5", "-566757/5", 3024],
            [0, "-760616/5", 1892646, "-9789329/5", 226404, -9060],
            [0, "12594/5", "-438711/5", 197316, "-604758/5", 8860],
            [0, 0, 0, -5076, 7900, -2823],
        ]
    ),
    combined_table=(
        ("-0.6709", "0.6709", "0", "0", "0", "0"),
        ("0.6709", "-0.8386", "1.6695", "-1.5018", "0", "0"),
        ("0", "0.3173", "-3.4744", "3.2674", "-0.1134", "0.0030"),
        ("0", "-0.1521", "1.8926", "-1.9579", "0.2264", "-0.0091"),
        ("0", "0.0025", "-0.0877", "0.1973", "-0.1210", "0.0089"),
        ("0", "0", "0", "-0.0051", "0.0079", "-0.0028"),
    ),
    table_scale_exponent=6,
)

A3 = Fixture(
    id="A3",
    text="""
# reducible type-I staircase ASSR matrix
-1 -2  0
-1 -3  0
-1 -4 -5
""",
    expected=ExpectedFacts(
        is_sr=True,
        is_assr=True,
        staircase=StaircaseType.TYPE_I,
        signature=Signature.of(-1, 1, -1),
        irreducible=False,
        combined_checkerboard=Checkerboard.PLUS,
    ),
    combined_exact=RMatrix([[3, -2, 0], [-2, 3, 0], [0, 0, 1]]),
    note="zero pattern differs from C(A)",
)

A4 = Fixture(
    id="A4",
    text="""
# irreducible type-I staircase SR matrix that is not ASSR
1 2 0
2 4 3
2 5 8
""",
    expected=ExpectedFacts(
        is_sr=True,
        is_assr=False,
        staircase=StaircaseType.TYPE_I,
        signature=Signature.of(1, 1, -1),
        irreducible=True,
        combined_checkerboard=Checkerboard.MINUS,
    ),
    combined_exact=RMatrix(
        [["-17/3", "20/3", 0], ["32/3", "-32/3", 1], [-4, 5, 0]]
    ),
    note="combined matrix is not type-I staircase",
)

A5 = Fixture(
    id="A5",
    text="""
# type-II staircase ASSR matrix with P_n A irreducible
-0.00001 -1 -1
-2       -5 -2
-3       -1  0
""",
    expected=ExpectedFacts(
        is_sr=True,
        is_assr=True,
        staircase=StaircaseType.TYPE_II,
        signature=Signature.of(-1, -1, 1),
        irreducible=True,
        combined_checkerboard=Checkerboard.PLUS,
        combined_is_assr=False,
    ),
    combined_table=(
        ("0.0000028", "-0.8571", "1.8571"),
        ("-0.2857", "2.1429", "-0.8571"),
        ("1.2857", "-0.2857", "0"),
    ),
)

A6 = Fixture(
    id="A6",
    text="""
# irreducible type-I staircase ASSR matrix whose |C(A)| is not SR
-260 -100 -71   0
-179  -70 -51 -10
 -10   -4  -3  -1
   0   -1  -1  -1
""",
    expected=ExpectedFacts(
        is_sr=True,
        is_assr=True,
        staircase=StaircaseType.TYPE_I,
        signature=Signature.of(-1, 1, 1, -1),
        irreducible=True,
        combined_checkerboard=Checkerboard.PLUS,
        combined_is_assr=False,
    ),
    combined_table=(
        ("14.7170", "-98.1132", "84.3962", "0"),
        ("-43.9057", "250.9434", "-211.6981", "5.6604"),
        ("30.1887", "-154.6415", "130.1887", "-4.7358"),
        ("0", "2.8113", "-1.8868", "0.0755"),
    ),
)

REFERENCE_FIXTURES = (A1, A2, A3, A4, A5, A6)


def reference_fixtures():
    return list(REFERENCE_FIXTURES)


def get_fixture(fixture_id):
    for fixture in REFERENCE_FIXTURES:
        if fixture.id == fixture_id:
            return fixture
    raise KeyError(f"unknown fixture {fixture_id!r}")


def identity_fixture(n):
    """I_n: type-I staircase, ASSR with all-positive signature, reducible for n > 1."""
    return identity(n)


def backward_identity_fixture(n):
    return backward_identity(n)
