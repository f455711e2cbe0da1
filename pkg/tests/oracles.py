"""Independent slow-route oracles used across the test suite.

Everything here is deliberately primitive: fixed-node trapezoid rules,
power series, interval bisection, and direct membership loops.  None of it
shares code with the package internals, so agreement between an oracle and
the library is evidence, not tautology.
"""

from __future__ import annotations

import math

import numpy as np


def bessel_trapezoid(n: int, x: float, nodes: int = 8192) -> float:
    """J_n(x) by a fixed-node trapezoid rule on the periodic integrand."""
    t = -math.pi + 2.0 * math.pi * np.arange(nodes) / nodes
    return float(np.mean(np.cos(x * np.sin(t) - n * t)))


def bessel_series(n: int, x: float, terms: int = 60) -> float:
    """Maclaurin series for J_n(x); reliable for |x| up to ~25."""
    term = (0.5 * x) ** n / math.factorial(n)
    total = term
    for m in range(1, terms):
        term *= -(0.25 * x * x) / (m * (m + n))
        total += term
    return total


def bisect_bessel_zero(n: int, lo: float, hi: float, nodes: int = 8192) -> float:
    """Zero of J_n in [lo, hi] by bisection on the trapezoid route only."""
    flo = bessel_trapezoid(n, lo, nodes)
    fhi = bessel_trapezoid(n, hi, nodes)
    assert flo * fhi < 0.0, f"no sign change of J_{n} on [{lo}, {hi}]"
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = bessel_trapezoid(n, mid, nodes)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def sweep_bessel_zeros(n: int, mu: float, step: float = 0.5) -> list[float]:
    """All zeros of J_n in (0, mu] by sign sweep plus bisection (trapezoid route)."""
    nodes = 4096 if n + mu < 1500 else 16384
    grid = np.arange(float(n), mu + step, step)
    vals = np.array([bessel_trapezoid(n, g, nodes) for g in grid])
    zeros = []
    for i in np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]:
        zeros.append(bisect_bessel_zero(n, float(grid[i]), float(grid[i + 1]), nodes))
    return [z for z in zeros if z <= mu]


def airy_series(x: float, terms: int = 80) -> float:
    """Ai(x) by the Maclaurin series; accurate for |x| up to ~8."""
    c1 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
    c2 = 3.0 ** (-1.0 / 3.0) / math.gamma(1.0 / 3.0)
    f = tf = 1.0
    g = tg = x
    for k in range(1, terms):
        tf *= x**3 / ((3 * k) * (3 * k - 1))
        tg *= x**3 / ((3 * k + 1) * (3 * k))
        f += tf
        g += tg
    return c1 * f - c2 * g


def bisect_airy_zero(lo: float, hi: float) -> float:
    """Zero of Ai(-t) in [lo, hi] via the series route only."""
    flo = airy_series(-lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = airy_series(-mid)
        if flo * fm <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def profile_height(x: float) -> float:
    """Closed-form profile, written independently of the package."""
    return (math.sqrt(1.0 - x * x) - x * math.acos(x)) / math.pi


def area_midpoint(panels: int = 1 << 14) -> float:
    """Area of the cusped domain by a plain midpoint rule."""
    xs = -1.0 + 2.0 * (np.arange(panels) + 0.5) / panels
    heights = np.array([profile_height(float(x)) - max(0.0, -float(x)) for x in xs])
    return float(np.sum(heights) * (2.0 / panels))


def column_by_membership(n: int, mu: float) -> int:
    """Count lattice heights in one column by direct membership tests."""
    count = 0
    top = mu * profile_height(n / mu) if abs(n) <= mu else -1.0
    for k in range(1, int(mu) + 2):
        y = k - 0.25
        if abs(n) <= mu and max(0.0, -float(n)) <= y <= top:
            count += 1
    return count


def disk_count_by_sweep(mu: float) -> int:
    """Eigenvalue count below mu^2 by sweeping every order's sign changes."""
    total = 0
    for n in range(0, int(mu) + 1):
        z = len(sweep_bessel_zeros(n, mu))
        total += z if n == 0 else 2 * z
    return total
