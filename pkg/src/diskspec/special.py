"""Bessel and Airy evaluation primitives.

Fast paths delegate to scipy; every fast path has an independent slow route
(an integral-representation quadrature for Bessel, a power series on the
test side for Airy) so agreement between routes is checkable rather than
assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as _sp

from .errors import DomainError, QuadratureError, RefinementError

__all__ = [
    "EvalAccuracy",
    "DEFAULT_ACCURACY",
    "AIRY_RANGE",
    "AIRY_ZERO_MAX_K",
    "AiryZero",
    "bessel_j",
    "bessel_quadrature_oracle",
    "airy_ai",
    "airy_zero",
]


@dataclass(frozen=True)
class EvalAccuracy:
    """Convergence targets for the self-validating quadrature routes."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_nodes: int = 2**20

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise DomainError(f"abs_tol must be positive and finite, got {self.abs_tol}")
        if not (self.rel_tol >= 0 and math.isfinite(self.rel_tol)):
            raise DomainError(f"rel_tol must be nonnegative and finite, got {self.rel_tol}")
        if self.max_nodes < 64:
            raise DomainError(f"max_nodes must be at least 64, got {self.max_nodes}")


DEFAULT_ACCURACY = EvalAccuracy()

# Negative end covers Airy zeros through k = 400 (t_400 ~ 152.6) with margin;
# beyond that the zero-refinement certificates below are not exercised.
AIRY_RANGE = (-160.0, 10.0)
AIRY_ZERO_MAX_K = 400


def _check_order(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"order must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    return int(n)


def bessel_j(n: int, x, want_derivative: bool = False):
    """First-kind Bessel function J_n(x), optionally with J_n'(x).

    ``x`` may be a float or an ndarray; the return matches its shape.
    The derivative uses the recurrence J_n' = (J_{n-1} - J_{n+1}) / 2,
    with J_{-1} = -J_1 covering n = 0.
    """
    n = _check_order(n)
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    val = _sp.jv(n, arr)
    if not want_derivative:
        return float(val) if np.isscalar(x) or arr.ndim == 0 else val
    der = 0.5 * (_sp.jv(n - 1, arr) - _sp.jv(n + 1, arr))
    if np.isscalar(x) or arr.ndim == 0:
        return float(val), float(der)
    return val, der


def bessel_quadrature_oracle(
    n: int, x: float, nodes: int = 64, accuracy: EvalAccuracy = DEFAULT_ACCURACY
) -> float:
    """J_n(x) from the integral representation, by node-doubling trapezoid.

    J_n(x) = (1/2pi) int_{-pi}^{pi} cos(x sin t - n t) dt.  The integrand is
    2pi-periodic and entire, so the equispaced trapezoid rule converges
    geometrically once the node count passes ~(n + |x|).  Doubles nodes until
    two successive levels agree within ``accuracy``; raises QuadratureError
    at the node cap.  Deliberately independent of the scipy route.
    """
    n = _check_order(n)
    if not math.isfinite(x):
        raise DomainError("argument must be finite")
    if nodes < 16:
        raise DomainError(f"starting node count must be at least 16, got {nodes}")
    acc = accuracy
    m = int(nodes)
    # An m-node rule folds every J_{n+jm}(x) onto the estimate, and levels m
    # and 2m share the even-j aliases, so agreement below n + |x| nodes can
    # be spurious.  Start above the aliasing band: the nearest folded order
    # then sits past the turning point and is already evanescent.
    while m < n + abs(x) + 16.0:
        m *= 2
    t = -math.pi + 2.0 * math.pi * np.arange(m) / m
    prev = float(np.mean(np.cos(x * np.sin(t) - n * t)))
    while m <= acc.max_nodes:
        m *= 2
        t = -math.pi + 2.0 * math.pi * np.arange(m) / m
        cur = float(np.mean(np.cos(x * np.sin(t) - n * t)))
        if abs(cur - prev) <= acc.abs_tol + acc.rel_tol * abs(cur):
            return cur
        prev = cur
    raise QuadratureError(
        f"bessel quadrature did not converge for n={n}, x={x} within {acc.max_nodes} nodes"
    )


def airy_ai(x, want_derivative: bool = False):
    """Airy function Ai(x) (and optionally Ai'(x)) on the supported window.

    The guard rejects arguments outside AIRY_RANGE: far negative arguments
    would need oscillatory asymptotics this package does not certify, and
    far positive ones underflow.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    lo, hi = AIRY_RANGE
    if np.any(arr < lo) or np.any(arr > hi):
        raise DomainError(f"argument outside supported Airy range [{lo}, {hi}]")
    ai, aip, _, _ = _sp.airy(arr)
    if not want_derivative:
        return float(ai) if np.isscalar(x) or arr.ndim == 0 else ai
    if np.isscalar(x) or arr.ndim == 0:
        return float(ai), float(aip)
    return ai, aip


@dataclass(frozen=True)
class AiryZero:
    """The k-th zero of Ai(-t), t > 0, with its asymptotic seed."""

    k: int
    t: float
    initial: float
    correction: float


def airy_zero(k: int) -> AiryZero:
    """k-th positive zero t_k of Ai(-t), refined from the asymptotic seed.

    Seed: t_k ~ (3 pi (4k - 1) / 8)^(2/3).  Newton iterations on Ai(-t) are
    run to machine stagnation and the result is certified by requiring
    |Ai(-t)| <= 1e-12; failure raises RefinementError.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise DomainError(f"index must be an integer, got {k!r}")
    if k < 1:
        raise DomainError(f"index must be positive, got {k}")
    if k > AIRY_ZERO_MAX_K:
        raise DomainError(f"index {k} exceeds supported maximum {AIRY_ZERO_MAX_K}")
    initial = (3.0 * math.pi * (4 * k - 1) / 8.0) ** (2.0 / 3.0)
    t = initial
    for _ in range(8):
        ai, aip, _, _ = _sp.airy(-t)
        if aip == 0.0:
            break
        step = ai / aip
        # Ai(-t) has d/dt Ai(-t) = -Ai'(-t); Newton step is +Ai/Ai'.
        t_new = t + step
        if abs(t_new - t) <= 1e-16 * t:
            t = t_new
            break
        t = t_new
    residual = abs(float(_sp.airy(-t)[0]))
    if residual > 1e-12:
        raise RefinementError(
            f"airy zero k={k} failed certification: |Ai(-t)| = {residual:.3e}"
        )
    return AiryZero(k=int(k), t=float(t), initial=float(initial), correction=float(t - initial))
