"""
Random matrices for property testing: diagonal scalings, permutations and a
rejection sampler for ASSR matrices.
"""

import logging
import random
from fractions import Fraction

from .classify import is_assr
from .conf import resolve
from .exact import RMatrix, backward_identity, diagonal, permutation_matrix
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)

SCALE_VALUES = tuple(
    Fraction(v)
    for v in ("1/4", "1/3", "1/2", "2/3", "1", "3/2", "2", "3", "4", "5", "6", "7", "8")
)

MIN_SAMPLE_ORDER = 2
MAX_SAMPLE_ORDER = 6


def random_positive_diagonal(rng, n):
    return diagonal([rng.choice(SCALE_VALUES) for _ in range(n)])


def random_nonsingular_diagonal(rng, n):
    """Diagonal matrix with nonzero entries of independent random signs."""
    return diagonal([rng.choice((1, -1)) * rng.choice(SCALE_VALUES) for _ in range(n)])


def random_permutation_matrix(rng, n):
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return permutation_matrix(perm)


def signed_diagonal(n, rng):
    """D_n: nonsingular diagonal with all entries of one random sign."""
    sign = rng.choice((1, -1))
    return diagonal([sign * rng.choice(SCALE_VALUES) for _ in range(n)])


def flipped_signed_diagonal(n, rng):
    return backward_identity(n) @ signed_diagonal(n, rng)


def scale_perturb(a, seed):
    """D A E with D, E positive diagonal drawn from ``SCALE_VALUES``."""
    rng = random.Random(seed)
    d = random_positive_diagonal(rng, a.n)
    e = random_positive_diagonal(rng, a.n)
    return d @ a @ e


def random_staircase_mask(rng, n):
    """
    Nonzero mask of a type-I staircase matrix. Column j is nonzero down to row
    ``lower[j]`` and row i is nonzero out to column ``upper[i]``; both bounds
    are nondecreasing and never cross the diagonal.
    """
    lower, upper = [], []
    for k in range(n):
        lower.append(rng.randint(max(k, lower[-1] if lower else 0), n - 1))
        upper.append(rng.randint(max(k, upper[-1] if upper else 0), n - 1))
    return [
        [(i >= j and i <= lower[j]) or (i < j and j <= upper[i]) for j in range(n)]
        for i in range(n)
    ]


def random_staircase_candidate(rng, n, entry_range):
    """
    Type-I staircase matrix whose nonzero entries share one random sign. A
    candidate is reversed by P_n half of the time to yield type-II matrices.
    """
    mask = random_staircase_mask(rng, n)
    sign = rng.choice((1, -1))
    rows = [
        [sign * rng.randint(1, entry_range) if mask[i][j] else 0 for j in range(n)]
        for i in range(n)
    ]
    candidate = RMatrix(rows)
    if rng.random() < 0.5:
        candidate = backward_identity(n) @ candidate
    return candidate


def sample_assr(n, trials=None, seed=None, entry_range=None):
    """
    Draw ``trials`` staircase candidates and keep the ASSR ones. Trial t uses
    ``random.Random(seed + t)``, so results are reproducible per trial.
    """
    if not MIN_SAMPLE_ORDER <= n <= MAX_SAMPLE_ORDER:
        raise PreconditionError(
            f"sampling needs {MIN_SAMPLE_ORDER} <= n <= {MAX_SAMPLE_ORDER}, got {n}"
        )
    trials = resolve("TRIALS", trials)
    seed = resolve("SEED", seed)
    entry_range = resolve("ENTRY_RANGE", entry_range)
    accepted = []
    for trial in range(trials):
        rng = random.Random(seed + trial)
        candidate = random_staircase_candidate(rng, n, entry_range)
        if is_assr(candidate).is_assr:
            accepted.append(candidate)
    logger.info(
        "sampled order %d: %d of %d candidates are ASSR (seed %d)",
        n, len(accepted), trials, seed,
    )
    return accepted
