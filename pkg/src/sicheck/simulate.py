"""Synthetic data generators and the Monte Carlo rejection-rate harness.

Four generator families, each indexed by a departure size c (the null
model holds exactly when c = 0):

    cubic        y = (b'x)^3 + c sum|x_l| + e,        x ~ N(0, I), e ~ N(0, 1)
    binary       y ~ Bernoulli(pi), pi = logistic(-b'x + c sum|x_l|)
    interaction  y = (b'x)^3 + c1|x1 x2| + c2|x1 x3| + c3|x2 x3| + e   (p = 3)
    bump         y = x1 + x2 + 4 exp(-(x1+x2)^2) + c sqrt(x1^2+x2^2) + e   (p = 2)

The harness runs a full check pipeline per replicate (generate, fit the
direction, pick the bandwidth, run the test) and reports the rejection
fraction with its binomial standard error.  Replicate r draws from the
stream (seed, r), so results are identical under any thread count.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bandwidth import select_bandwidth
from .dataset import Dataset
from .exceptions import ConfigError
from .index import fit_index_ols
from .omnibus import BootstrapConfig, gamma_grid, omnibus_test
from .score_test import maximin_test, standardized_test
from .smoother import SmootherConfig
from .weights import WeightSpec


class ModelKind(enum.Enum):
    CUBIC = "cubic"
    BINARY = "binary"
    INTERACTION = "interaction"
    BUMP = "bump"


def default_beta(p: int) -> tuple[float, ...]:
    """Unit vector with alternating signs, (1, -1, 1, ...) / sqrt(p)."""
    if p < 1:
        raise ConfigError(f"dimension must be >= 1, got {p}")
    b = np.array([(-1.0) ** k for k in range(p)])
    return tuple(b / np.linalg.norm(b))


@dataclass(frozen=True)
class Scenario:
    model: ModelKind
    n: int
    p: int
    beta: tuple[float, ...] | None = None
    c: float = 0.0
    c_interaction: tuple[float, float, float] | None = None
    sigma_eps: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"sample size must be >= 1, got {self.n}")
        if self.p < 1:
            raise ConfigError(f"dimension must be >= 1, got {self.p}")
        if self.model is ModelKind.INTERACTION and self.p != 3:
            raise ConfigError("interaction model requires p = 3")
        if self.model is ModelKind.BUMP and self.p != 2:
            raise ConfigError("bump model requires p = 2")
        if not self.sigma_eps > 0:
            raise ConfigError(f"noise scale must be positive, got {self.sigma_eps}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.model is ModelKind.BUMP:
            if self.beta is not None:
                raise ConfigError("bump model has a fixed mean function; beta does not apply")
        else:
            beta = self.beta if self.beta is not None else default_beta(self.p)
            beta = tuple(float(b) for b in beta)
            if len(beta) != self.p:
                raise ConfigError(
                    f"beta has dimension {len(beta)}, scenario has p={self.p}"
                )
            if abs(np.linalg.norm(beta) - 1.0) > 1e-6:
                raise ConfigError("beta must have unit Euclidean norm")
            object.__setattr__(self, "beta", beta)
        if self.c_interaction is not None:
            if self.model is not ModelKind.INTERACTION:
                raise ConfigError("c_interaction applies to the interaction model only")
            object.__setattr__(
                self, "c_interaction", tuple(float(v) for v in self.c_interaction)
            )

    @property
    def beta_vec(self) -> np.ndarray:
        return np.asarray(self.beta, dtype=float)

    @property
    def c_triple(self) -> tuple[float, float, float]:
        return self.c_interaction if self.c_interaction is not None else (self.c,) * 3


def cubic_mean(x, beta, c: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    proj = x @ np.asarray(beta, dtype=float)
    return proj**3 + c * np.abs(x).sum(axis=1)


def binary_success_prob(x, beta, c: float) -> np.ndarray:
    """Success probability logistic(-b'x + c sum|x_l|), computed stably."""
    x = np.asarray(x, dtype=float)
    t = -(x @ np.asarray(beta, dtype=float)) + c * np.abs(x).sum(axis=1)
    return np.exp(-np.logaddexp(0.0, -t))


def interaction_mean(x, beta, c_triple) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    c1, c2, c3 = c_triple
    proj = x @ np.asarray(beta, dtype=float)
    return (
        proj**3
        + c1 * np.abs(x[:, 0] * x[:, 1])
        + c2 * np.abs(x[:, 0] * x[:, 2])
        + c3 * np.abs(x[:, 1] * x[:, 2])
    )


def bump_mean(x, c: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    t = x[:, 0] + x[:, 1]
    return t + 4.0 * np.exp(-(t**2)) + c * np.sqrt((x**2).sum(axis=1))


def _rng_for(scn: Scenario, rng) -> np.random.Generator:
    return rng if rng is not None else np.random.default_rng(scn.seed)


def gen_continuous(scn: Scenario, *, rng=None, zero_noise: bool = False) -> Dataset:
    """Cubic-link model with an absolute-sum departure of size c."""
    if scn.model is not ModelKind.CUBIC:
        raise ConfigError(f"scenario model is {scn.model.value}, not cubic")
    rng = _rng_for(scn, rng)
    x = rng.standard_normal((scn.n, scn.p))
    y = cubic_mean(x, scn.beta_vec, scn.c)
    if not zero_noise:
        y = y + rng.standard_normal(scn.n)
    return Dataset(x=x, y=y)


def gen_binary(scn: Scenario, *, rng=None, zero_noise: bool = False) -> Dataset:
    """Logistic binary-response model; zero_noise returns the conditional
    success probability as the response (the e = 0 analogue)."""
    if scn.model is not ModelKind.BINARY:
        raise ConfigError(f"scenario model is {scn.model.value}, not binary")
    rng = _rng_for(scn, rng)
    x = rng.standard_normal((scn.n, scn.p))
    pi = binary_success_prob(x, scn.beta_vec, scn.c)
    if zero_noise:
        return Dataset(x=x, y=pi)
    y = (rng.random(scn.n) < pi).astype(float)
    return Dataset(x=x, y=y)


def gen_interaction(scn: Scenario, *, rng=None, zero_noise: bool = False) -> Dataset:
    """Cubic-link model with pairwise interaction departures (p = 3)."""
    if scn.model is not ModelKind.INTERACTION:
        raise ConfigError(f"scenario model is {scn.model.value}, not interaction")
    rng = _rng_for(scn, rng)
    x = rng.standard_normal((scn.n, 3))
    y = interaction_mean(x, scn.beta_vec, scn.c_triple)
    if not zero_noise:
        y = y + rng.standard_normal(scn.n)
    return Dataset(x=x, y=y)


def gen_bump(scn: Scenario, *, rng=None, zero_noise: bool = False) -> Dataset:
    """Linear link with a Gaussian bump and a radial departure (p = 2)."""
    if scn.model is not ModelKind.BUMP:
        raise ConfigError(f"scenario model is {scn.model.value}, not bump")
    rng = _rng_for(scn, rng)
    x = rng.standard_normal((scn.n, 2))
    y = bump_mean(x, scn.c)
    if not zero_noise:
        y = y + scn.sigma_eps * rng.standard_normal(scn.n)
    return Dataset(x=x, y=y)


_GENERATORS = {
    ModelKind.CUBIC: gen_continuous,
    ModelKind.BINARY: gen_binary,
    ModelKind.INTERACTION: gen_interaction,
    ModelKind.BUMP: gen_bump,
}


def generate(scn: Scenario, *, rng=None, zero_noise: bool = False) -> Dataset:
    """Dispatch to the scenario's generator; deterministic given the seed."""
    return _GENERATORS[scn.model](scn, rng=rng, zero_noise=zero_noise)


@dataclass(frozen=True)
class ScoreCheck:
    """Run the scalar standardized score test with one weight.

    A fixed ``h`` bypasses the data-driven selector (bandwidth
    sensitivity studies); the default reselects per replicate.
    """

    weight: WeightSpec
    h: float | None = None

    @property
    def label(self) -> str:
        return f"score[{self.weight.label}]"


@dataclass(frozen=True)
class MaximinCheck:
    """Run the chi-square test on a family of weights."""

    weights: tuple[WeightSpec, ...]
    h: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise ConfigError("maximin check needs at least one weight")

    @property
    def label(self) -> str:
        return "maximin[" + "+".join(w.label for w in self.weights) + "]"


@dataclass(frozen=True)
class OmnibusCheck:
    """Run the bootstrap-calibrated sup-statistic test."""

    boot_m: int = 500
    grid_bound: float = 3.0
    grid_per_axis: int = 7
    h: float | None = None

    @property
    def label(self) -> str:
        return f"omnibus[m={self.boot_m}]"


def scenario_to_dict(scn: Scenario) -> dict:
    """Plain-JSON encoding of a scenario."""
    return {
        "model": scn.model.value,
        "n": scn.n,
        "p": scn.p,
        "beta": None if scn.beta is None else list(scn.beta),
        "c": scn.c,
        "c_interaction": (
            None if scn.c_interaction is None else list(scn.c_interaction)
        ),
        "sigma_eps": scn.sigma_eps,
        "seed": scn.seed,
    }


@dataclass(frozen=True, eq=False)
class MCResult:
    rejection_rate: float
    replications: int
    mc_stderr: float
    scenario: Scenario
    test_label: str
    alpha: float

    def to_json_dict(self) -> dict:
        return {
            "rejection_rate": self.rejection_rate,
            "replications": self.replications,
            "mc_stderr": self.mc_stderr,
            "scenario": scenario_to_dict(self.scenario),
            "test": self.test_label,
            "alpha": self.alpha,
        }


def mise_weight_values(check, x) -> np.ndarray:
    """Weight values driving the bandwidth search for a given check.

    The scalar test uses its own weight; checks without a single real
    weight (maximin families, the omnibus test, custom callables) default
    to the even quadratic weight sum x_l^2.
    """
    if isinstance(check, ScoreCheck) and not check.weight.is_complex:
        return check.weight.evaluate(x)
    return WeightSpec.sum_squares().evaluate(x)


def _replicate_reject(scn: Scenario, check, alpha: float, r: int) -> bool:
    rng = np.random.default_rng([scn.seed, r])
    data = generate(scn, rng=rng)
    fit = fit_index_ols(data)
    fixed_h = getattr(check, "h", None)
    if fixed_h is None:
        _, h = select_bandwidth(data, fit, mise_weight_values(check, data.x))
    else:
        h = fixed_h
    cfg = SmootherConfig(h=h)
    if isinstance(check, ScoreCheck):
        return standardized_test(data, fit, check.weight, cfg, alpha).reject
    if isinstance(check, MaximinCheck):
        return maximin_test(data, fit, check.weights, cfg, alpha).reject
    if isinstance(check, OmnibusCheck):
        boot = BootstrapConfig(
            m=check.boot_m, alpha=alpha, seed=int(rng.integers(2**63))
        )
        grid = gamma_grid(data.p, check.grid_bound, check.grid_per_axis)
        return omnibus_test(data, fit, cfg, boot, grid).reject
    if callable(check):
        return bool(check(data, fit, cfg, alpha, rng))
    raise ConfigError(f"unknown test configuration {check!r}")


def monte_carlo(
    scn: Scenario, check, reps: int, alpha: float = 0.05, threads: int = 1
) -> MCResult:
    """Rejection rate of a check over seeded replicates.

    Any replicate-level failure aborts the run with the replicate index
    and scenario attached.
    """
    if reps < 1:
        raise ConfigError(f"replications must be >= 1, got {reps}")
    if not 0.0 < alpha < 1.0:
        raise ConfigError(f"alpha must lie in (0, 1), got {alpha}")
    if threads < 1:
        raise ConfigError(f"thread count must be >= 1, got {threads}")

    def one(r: int) -> bool:
        try:
            return bool(_replicate_reject(scn, check, alpha, r))
        except Exception as exc:
            raise RuntimeError(
                f"replicate {r} failed for scenario {scn}: {exc}"
            ) from exc

    if threads == 1:
        flags = [one(r) for r in range(reps)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(one, range(reps)))
    rate = sum(flags) / reps
    label = check.label if hasattr(check, "label") else getattr(
        check, "__name__", str(check)
    )
    return MCResult(
        rejection_rate=rate,
        replications=reps,
        mc_stderr=math.sqrt(rate * (1.0 - rate) / reps),
        scenario=scn,
        test_label=label,
        alpha=alpha,
    )
