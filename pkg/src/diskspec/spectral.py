"""Dirichlet disk eigenvalue counting via certified Bessel zeros.

N(mu) counts eigenvalue square roots up to mu: each zero x of J_n with
x <= mu contributes once for n = 0 and twice for n >= 1 (angular
multiplicity).  The two-term Weyl prediction mu^2/4 - mu/2 leaves a
remainder this package studies; the lattice count over the cusped domain
must match N(mu) exactly, column for column.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RefinementError
from .geometry import scale_function
from .lattice import count_lattice
from .zeros import MU_MAX, initial_guess, refine_zero, zero_array

__all__ = [
    "INNER_REGIME_C",
    "BOUNDARY_SLACK",
    "CountSample",
    "count_disk",
    "disk_counts_many",
    "weyl_two_term",
    "weyl_remainder",
    "count_sample",
    "compare_counts",
    "inner_residual",
]

# The phase-space prediction of a zero is only compared against zeros with
# index beyond c * order; c = 1 keeps the comparison in the regime where
# the McMahon route is the guess authority.
INNER_REGIME_C = 1.0

# Relative slack applied to the cutoff so "x <= mu" is stable against the
# machine-scale residual of certified zeros.
BOUNDARY_SLACK = 4.0 * float(np.finfo(float).eps)


@dataclass(frozen=True)
class CountSample:
    """One scale: both counts, the two-term prediction, and the remainder."""

    mu: float
    n_disk: int
    n_lattice: int
    weyl2: float
    remainder: float
    diff: int


def _check_mu(mu: float) -> float:
    if not math.isfinite(mu):
        raise DomainError(f"scale must be finite, got {mu}")
    mu = float(mu)
    if not (0.0 < mu <= MU_MAX):
        raise DomainError(f"scale must lie in (0, {MU_MAX}], got {mu}")
    return mu


def count_disk(mu: float, threads: int = 1) -> int:
    """N(mu): number of Dirichlet disk eigenvalues with sqrt below mu.

    Sums certified zero counts over orders n = 0..floor(mu), weighting
    n >= 1 twice.  The thread option parallelizes over orders; results are
    reduced in order index, so the count is independent of thread timing.
    """
    mu = _check_mu(mu)
    if threads < 1:
        raise DomainError(f"threads must be positive, got {threads}")
    cutoff = mu * (1.0 + BOUNDARY_SLACK)
    orders = range(int(math.floor(cutoff)) + 1)

    def zeros_below(n: int) -> int:
        return int(zero_array(n, cutoff).size)

    if threads == 1:
        counts = [zeros_below(n) for n in orders]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(zeros_below, orders))
    return counts[0] + 2 * sum(counts[1:])


def disk_counts_many(mus, threads: int = 1) -> np.ndarray:
    """N(mu) for a batch of scales, sharing one zero enumeration.

    Zeros of each order are enumerated once up to the largest scale and
    counted per scale by sorted search; identical to calling count_disk
    per scale, but linear instead of quadratic in the batch.
    """
    mus = np.asarray(list(mus), dtype=float)
    if mus.size == 0:
        return np.zeros(0, dtype=np.int64)
    for m in mus:
        _check_mu(float(m))
    if threads < 1:
        raise DomainError(f"threads must be positive, got {threads}")
    cutoffs = mus * (1.0 + BOUNDARY_SLACK)
    top = float(np.max(cutoffs))
    orders = range(int(math.floor(top)) + 1)

    def counts_for(n: int) -> np.ndarray:
        xs = zero_array(n, top)
        return np.searchsorted(xs, cutoffs, side="right")

    if threads == 1:
        rows = [counts_for(n) for n in orders]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(counts_for, orders))
    total = np.array(rows[0], dtype=np.int64)
    for row in rows[1:]:
        total += 2 * row.astype(np.int64)
    return total


def weyl_two_term(mu: float) -> float:
    """Two-term Weyl prediction mu^2/4 - mu/2 for the disk count."""
    mu = _check_mu(mu)
    return 0.25 * mu * mu - 0.5 * mu


def weyl_remainder(mu: float, count: int) -> float:
    """Remainder of a count against the two-term prediction at scale mu."""
    return float(count) - weyl_two_term(mu)


def count_sample(mu: float, threads: int = 1) -> CountSample:
    """Evaluate both counting routes at one scale and bundle the numbers."""
    mu = _check_mu(mu)
    n_disk = count_disk(mu, threads=threads)
    n_lat = count_lattice(mu)
    weyl2 = weyl_two_term(mu)
    return CountSample(
        mu=mu,
        n_disk=n_disk,
        n_lattice=n_lat,
        weyl2=weyl2,
        remainder=n_disk - weyl2,
        diff=n_disk - n_lat,
    )


def compare_counts(mu: float, threads: int = 1) -> int:
    """count_disk(mu) - count_lattice(mu).

    The two routes track each other to O(mu^(2/3)): a zero slightly
    overshoots its phase-space height prediction, so occasionally a scale
    admits the lattice point but not yet the zero.  The scan-level check
    bounds |diff| / mu^(2/3), it does not demand zero.
    """
    return count_sample(mu, threads=threads).diff


def inner_residual(n: int, k: int) -> float:
    """x_k(n) minus the phase-space prediction F(n, k - 1/4).

    Only defined in the inner regime k > c n (c = INNER_REGIME_C), where
    the scale function F inverts the column-height relation; the residual
    is O(1) and shrinks as the zero moves away from the transition range.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"order must be an integer, got {n!r}")
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise DomainError(f"index must be an integer, got {k!r}")
    if n < 0 or k < 1:
        raise DomainError(f"need order >= 0 and index >= 1, got {n}, {k}")
    if not k > INNER_REGIME_C * n:
        raise DomainError(
            f"index {k} not in the inner regime k > {INNER_REGIME_C} * {n}"
        )
    zero = refine_zero(n, initial_guess(n, k))
    if zero.k != k:
        raise RefinementError(f"refined zero slotted to index {zero.k}, wanted {k}")
    return zero.x - scale_function(float(n), k - 0.25)
