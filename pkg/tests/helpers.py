"""Shared brute-force oracles and numerical utilities for the test suite.

Every oracle evaluates the defining sums with explicit Python loops,
independent of the vectorized library code it checks.
"""

import cmath
import math

import numpy as np


def quartic(u: float) -> float:
    return (15.0 / 16.0) * (1.0 - u * u) ** 2 if abs(u) < 1.0 else 0.0


def brute_loo_fit(values, ranks, j, u, h):
    n = len(values)
    acc = 0.0
    for i in range(n):
        if i == j:
            continue
        acc += values[i] * quartic((u - ranks[i]) / h)
    return acc / ((n - 1) * h)


def brute_residuals(y, ranks, h):
    n = len(y)
    return np.array([y[j] - brute_loo_fit(y, ranks, j, ranks[j], h) for j in range(n)])


def brute_smoothed(values, ranks, h):
    n = len(values)
    return np.array(
        [brute_loo_fit(values, ranks, j, ranks[j], h) for j in range(n)]
    )


def brute_score(eps, w):
    n = len(eps)
    return sum(eps[j] * w[j] for j in range(n)) / math.sqrt(n)


def brute_variance(eps, w, wbar):
    n = len(eps)
    return sum(eps[j] ** 2 * (w[j] - wbar[j]) ** 2 for j in range(n)) / n


def brute_covariance(eps, s_values, s_smoothed):
    n, d = s_values.shape
    out = np.zeros((d, d))
    for i in range(d):
        for j in range(d):
            acc = 0.0
            for k in range(n):
                acc += (
                    eps[k] ** 2
                    * (s_values[k, i] - s_smoothed[k, i])
                    * (s_values[k, j] - s_smoothed[k, j])
                )
            out[i, j] = acc / n
    return out


def brute_cf(eps, x, gamma):
    n = len(eps)
    acc = 0.0 + 0.0j
    for j in range(n):
        phase = sum(gamma[k] * x[j, k] for k in range(x.shape[1]))
        acc += eps[j] * cmath.exp(1j * phase)
    return acc / math.sqrt(n)


def brute_multiplier_sup(eps, centered, e):
    n, g = centered.shape
    best = 0.0
    for col in range(g):
        acc = 0.0 + 0.0j
        for i in range(n):
            acc += e[i] * eps[i] * centered[i, col]
        best = max(best, abs(acc) / math.sqrt(n))
    return best


def simpson(f, a, b, n_intervals=2000):
    """Composite Simpson quadrature; n_intervals must be even."""
    if n_intervals % 2:
        n_intervals += 1
    x = np.linspace(a, b, n_intervals + 1)
    y = f(x)
    h = (b - a) / n_intervals
    return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def normal_cdf_quadrature(x: float) -> float:
    f = lambda t: np.exp(-t * t / 2.0) / math.sqrt(2.0 * math.pi)
    return simpson(f, -12.0, x, 40000)


def chisq_cdf_quadrature(x: float, df: int) -> float:
    # substitute u = t^2 so the df = 1 singularity disappears
    const = 1.0 / (2.0 ** (df / 2.0 - 1.0) * math.gamma(df / 2.0))
    f = lambda t: const * t ** (df - 1) * np.exp(-t * t / 2.0)
    return simpson(f, 0.0, math.sqrt(x), 40000)


def ks_distance(sample, cdf) -> float:
    """Kolmogorov distance between a sample and a continuous cdf."""
    s = np.sort(np.asarray(sample, dtype=float))
    n = s.size
    vals = np.array([cdf(v) for v in s])
    i = np.arange(1, n + 1)
    return max(
        float(np.max(np.abs(i / n - vals))),
        float(np.max(np.abs((i - 1) / n - vals))),
    )


def random_small_case(rng, n_max=6):
    """Random tiny dataset, direction and bandwidth for oracle fuzzing."""
    n = int(rng.integers(2, n_max + 1))
    p = int(rng.integers(1, 4))
    x = rng.standard_normal((n, p))
    y = rng.standard_normal(n)
    beta = rng.standard_normal(p)
    while np.linalg.norm(beta) < 1e-6:
        beta = rng.standard_normal(p)
    h = float(rng.uniform(0.05, 1.0))
    return x, y, beta, h
