"""
Sign regularity classification.

A matrix is SR when, for every order m, all its minors of order m share one
weak sign; SSR when those minors are moreover nonzero; ASSR when it is a
type-I or type-II staircase matrix whose nontrivial minors of each order have
one strict sign. The per-order signs form the signature.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import networkx as nx

from .conf import resolve
from .exact import det, minor
from .exceptions import (
    IndeterminateSignatureError,
    OrderLimitExceeded,
    PreconditionError,
)
from .patterns import (
    StaircaseType,
    _is_nontrivial,
    enumerate_index_sets,
    is_type_i_staircase,
    staircase_type,
)

logger = logging.getLogger(__name__)

SIGN_CONFLICT = "sign-conflict"
VANISHING_MINOR = "vanishing-minor"
NOT_STAIRCASE = "not-staircase"


@dataclass(frozen=True)
class Signature:
    """
    Per-order minor signs: +1, -1, or None when every examined minor of that
    order is zero. ``sig[0]`` is the fixed virtual entry 1.
    """

    entries: tuple

    @classmethod
    def of(cls, *values):
        return cls(tuple(values))

    @property
    def n(self):
        return len(self.entries)

    @property
    def is_total(self):
        return all(e is not None for e in self.entries)

    def __getitem__(self, m):
        if m == 0:
            return 1
        if not 1 <= m <= self.n:
            raise IndexError(f"signature order {m} outside 0..{self.n}")
        return self.entries[m - 1]

    def __str__(self):
        def fmt(e):
            return "?" if e is None else ("+1" if e > 0 else "-1")

        return "(" + ",".join(fmt(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class MinorWitness:
    """
    A minor det A[rows|cols] that breaks a property. For sign conflicts
    ``partner`` is an earlier minor of the same order with the opposite sign.
    """

    order: int
    rows: tuple
    cols: tuple
    value: Fraction
    reason: str
    partner: "MinorWitness | None" = None


@dataclass(frozen=True)
class Classification:
    """
    Flags left as None were not evaluated by the operation that produced the
    result; :func:`classify` evaluates all of them.
    """

    order: int
    is_sr: bool | None = None
    is_ssr: bool | None = None
    is_assr: bool | None = None
    signature: Signature | None = None
    staircase: StaircaseType | None = None
    irreducible: bool | None = None
    nonsingular: bool | None = None
    # Nontrivial-minor rule used by the ASSR scan.
    rule: StaircaseType | None = None
    sr_witness: MinorWitness | None = None
    ssr_witness: MinorWitness | None = None
    assr_witness: MinorWitness | None = None

    @property
    def witness(self):
        return self.sr_witness or self.ssr_witness or self.assr_witness


def check_order(a, max_order=None):
    limit = resolve("MAX_ORDER", max_order)
    if a.n > limit:
        logger.warning("refusing order %d above max_order %d", a.n, limit)
        raise OrderLimitExceeded(a.n, limit)


def _square_index_pairs(n, m):
    index_sets = enumerate_index_sets(m, n)
    for rows in index_sets:
        for cols in index_sets:
            yield rows, cols


def _sign(value):
    return 1 if value > 0 else -1


def sr_signature(a, max_order=None):
    """
    Scan all minors order by order. Stops at the first order where a positive
    and a negative minor coexist; the lexicographically first such pair is the
    witness.
    """
    check_order(a, max_order)
    n = a.n
    signs = []
    for m in range(1, n + 1):
        first = {1: None, -1: None}
        for rows, cols in _square_index_pairs(n, m):
            value = minor(a, rows, cols)
            if value == 0:
                continue
            s = _sign(value)
            if first[-s] is not None:
                witness = MinorWitness(
                    m, rows, cols, value, SIGN_CONFLICT, partner=first[-s]
                )
                return Classification(order=n, is_sr=False, sr_witness=witness)
            if first[s] is None:
                first[s] = MinorWitness(m, rows, cols, value, SIGN_CONFLICT)
        signs.append(1 if first[1] else -1 if first[-1] else None)
    return Classification(
        order=n,
        is_sr=True,
        signature=Signature(tuple(signs)),
        nonsingular=signs[-1] is not None,
    )


def is_ssr(a, max_order=None):
    check_order(a, max_order)
    n = a.n
    signs = []
    for m in range(1, n + 1):
        first = None
        for rows, cols in _square_index_pairs(n, m):
            value = minor(a, rows, cols)
            if value == 0:
                witness = MinorWitness(m, rows, cols, value, VANISHING_MINOR)
                return Classification(order=n, is_ssr=False, ssr_witness=witness)
            if first is None:
                first = MinorWitness(m, rows, cols, value, SIGN_CONFLICT)
            elif _sign(value) != _sign(first.value):
                witness = MinorWitness(
                    m, rows, cols, value, SIGN_CONFLICT, partner=first
                )
                return Classification(order=n, is_ssr=False, ssr_witness=witness)
        signs.append(_sign(first.value))
    return Classification(
        order=n,
        is_sr=True,
        is_ssr=True,
        signature=Signature(tuple(signs)),
        nonsingular=True,
    )


def is_assr(a, max_order=None):
    """
    Staircase test followed by a strict-sign scan of the nontrivial minors.

    A dense matrix is both type-I and type-II staircase; the type-I rule is
    applied then, and for dense matrices every submatrix is nontrivial so the
    result coincides with SSR.
    """
    check_order(a, max_order)
    n = a.n
    kind = staircase_type(a)
    if kind is StaircaseType.NEITHER:
        witness = MinorWitness(0, (), (), Fraction(0), NOT_STAIRCASE)
        return Classification(
            order=n, is_assr=False, staircase=kind, assr_witness=witness
        )
    rule = StaircaseType.TYPE_I if kind.includes_type_i else StaircaseType.TYPE_II
    if kind is StaircaseType.BOTH:
        logger.info("matrix is type-I and type-II staircase; using the type-I rule")

    signs = []
    for m in range(1, n + 1):
        first = None
        for rows, cols in _square_index_pairs(n, m):
            if not _is_nontrivial(a.rows, rows, cols, rule):
                continue
            value = minor(a, rows, cols)
            if value == 0:
                witness = MinorWitness(m, rows, cols, value, VANISHING_MINOR)
                return Classification(
                    order=n, is_assr=False, staircase=kind, rule=rule,
                    assr_witness=witness,
                )
            if first is None:
                first = MinorWitness(m, rows, cols, value, SIGN_CONFLICT)
            elif _sign(value) != _sign(first.value):
                witness = MinorWitness(
                    m, rows, cols, value, SIGN_CONFLICT, partner=first
                )
                return Classification(
                    order=n, is_assr=False, staircase=kind, rule=rule,
                    assr_witness=witness,
                )
        # The leading (type-I) or anti-leading (type-II) principal submatrix
        # of order m is always nontrivial, so ``first`` is set.
        signs.append(_sign(first.value))
    # det A itself was one of the nontrivial minors checked above.
    return Classification(
        order=n,
        is_sr=True,
        is_assr=True,
        signature=Signature(tuple(signs)),
        staircase=kind,
        rule=rule,
        nonsingular=True,
    )


def is_irreducible(a):
    """
    Strong connectivity of the digraph with an edge i -> j for every nonzero
    off-diagonal entry a_ij.
    """
    if a.n == 1:
        return True
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, a.n + 1))
    graph.add_edges_from(
        (i, j) for i, j, value in a.entries() if i != j and value != 0
    )
    return nx.is_strongly_connected(graph)


def irreducible_by_theorem_1(a, max_order=None):
    """
    For a type-I staircase ASSR matrix, irreducibility is equivalent to having
    no zero on the subdiagonal and the superdiagonal.
    """
    if not is_type_i_staircase(a):
        raise PreconditionError("matrix is not type-I staircase")
    if not is_assr(a, max_order).is_assr:
        raise PreconditionError("matrix is not ASSR")
    return all(a[j + 1, j] != 0 and a[j, j + 1] != 0 for j in range(1, a.n))


def brute_force_reducibility(a, max_order=None):
    """
    True when some ordering (i_1..i_k, j_k+1..j_n) of 1..n has
    A[i_1..i_k | j_k+1..j_n] = 0. Factorial search.
    """
    limit = resolve("BRUTE_FORCE_MAX_ORDER", max_order)
    if a.n > limit:
        logger.warning(
            "refusing order %d above the permutation search limit %d", a.n, limit
        )
        raise OrderLimitExceeded(a.n, limit, "the permutation search")
    indices = range(1, a.n + 1)
    for ordering in permutations(indices):
        for k in range(1, a.n):
            head, tail = ordering[:k], ordering[k:]
            if all(a[i, j] == 0 for i in head for j in tail):
                return True
    return False


def _require_total(sig):
    if not sig.is_total:
        raise IndeterminateSignatureError(f"signature {sig} has indeterminate entries")


def signature_of_pn_a(sig):
    """Signature of P_n A from that of A: eps'_m = (-1)^(m(m-1)/2) eps_m."""
    _require_total(sig)
    return Signature(
        tuple((-1) ** (m * (m - 1) // 2) * sig[m] for m in range(1, sig.n + 1))
    )


def signature_of_conjugated_inverse(sig):
    """Signature of S_n A^-1 S_n from that of A: eps_i = eps_n eps_(n-i), eps_0 = 1."""
    _require_total(sig)
    n = sig.n
    return Signature(tuple(sig[n] * sig[n - i] for i in range(1, n + 1)))


def is_monomial(a):
    nonzero = [[x != 0 for x in row] for row in a.rows]
    return all(sum(row) == 1 for row in nonzero) and all(
        sum(col) == 1 for col in zip(*nonzero)
    )


def is_signed_diagonal(a):
    """Diagonal matrix whose diagonal entries are nonzero and share one sign."""
    if any(value != 0 for i, j, value in a.entries() if i != j):
        return False
    diag = [a[i, i] for i in range(1, a.n + 1)]
    return all(d > 0 for d in diag) or all(d < 0 for d in diag)


def classify(a, max_order=None):
    """Evaluate every flag of :class:`Classification`."""
    check_order(a, max_order)
    sr = sr_signature(a, max_order)
    if sr.is_sr:
        ssr = is_ssr(a, max_order)
    else:
        ssr = Classification(order=a.n, is_ssr=False, ssr_witness=sr.sr_witness)
    assr = is_assr(a, max_order)
    return Classification(
        order=a.n,
        is_sr=sr.is_sr,
        is_ssr=ssr.is_ssr,
        is_assr=assr.is_assr,
        signature=sr.signature or assr.signature,
        staircase=assr.staircase,
        irreducible=is_irreducible(a),
        nonsingular=det(a) != 0,
        rule=assr.rule,
        sr_witness=sr.sr_witness,
        ssr_witness=ssr.ssr_witness,
        assr_witness=assr.assr_witness,
    )
