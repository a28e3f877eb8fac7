"""Leave-one-out kernel smoothing on rank-transformed projections.

For observation j the smoother averages the remaining values with kernel
weights on the rank scale,

    fit_j(u) = 1/((n-1) h) * sum_{i != j} v_i K((u - U_i) / h),

a plain sum with no density denominator: the ranks are near-uniform on
(0, 1], which is what makes the unnormalized average consistent.  An empty
kernel window yields the literal empty sum, 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .exceptions import ConfigError, DataError, InsufficientDataError
from .index import IndexFit
from .kernels import KernelId, kernel_function


@dataclass(frozen=True)
class SmootherConfig:
    h: float
    kernel: KernelId = KernelId.QUARTIC

    def __post_init__(self):
        if not 0.0 < self.h <= 1.0:
            raise ConfigError(
                f"bandwidth must lie in (0, 1] on the rank scale, got {self.h}"
            )


def loo_matrix(u_ranks, h: float, kernel: KernelId = KernelId.QUARTIC) -> np.ndarray:
    """Leave-one-out weight matrix S on the rank scale.

    S[i, j] = K((U_j - U_i) / h) / ((n - 1) h) with a zero diagonal, so the
    fitted value at observation j for a value vector v is (v @ S)[j].
    Accepts any h > 0 (bandwidth search probes beyond the config range).
    """
    if not h > 0:
        raise ConfigError(f"bandwidth must be positive, got {h}")
    u = np.asarray(u_ranks, dtype=float)
    n = u.size
    if n < 2:
        raise InsufficientDataError("leave-one-out smoothing needs n >= 2")
    kern = kernel_function(kernel)
    s = kern((u[None, :] - u[:, None]) / h)
    np.fill_diagonal(s, 0.0)
    return s / ((n - 1) * h)


def loo_smooth(values, u_ranks, j: int, u: float, cfg: SmootherConfig):
    """Leave-one-out fitted value at point ``u``, excluding observation j."""
    v = np.asarray(values)
    ranks = np.asarray(u_ranks, dtype=float)
    n = ranks.size
    if v.shape != ranks.shape:
        raise DataError("values and ranks must have equal length")
    if n < 2:
        raise InsufficientDataError("leave-one-out smoothing needs n >= 2")
    if not 0 <= j < n:
        raise DataError(f"observation index {j} out of range for n={n}")
    kern = kernel_function(cfg.kernel)
    w = kern((u - ranks) / cfg.h)
    w[j] = 0.0
    return (v * w).sum() / ((n - 1) * cfg.h)


def loo_fit_all(values, u_ranks, cfg: SmootherConfig) -> np.ndarray:
    """Leave-one-out fits at every observation's own rank.

    ``values`` may be a vector or an (n, d) column stack; complex values
    (characteristic-function weights) pass through unchanged.
    """
    s = loo_matrix(u_ranks, cfg.h, cfg.kernel)
    v = np.asarray(values)
    if v.shape[0] != s.shape[0]:
        raise DataError("values and ranks must have equal length")
    if v.ndim == 1:
        return v @ s
    return s.T @ v


def residuals(data: Dataset, fit: IndexFit, cfg: SmootherConfig) -> np.ndarray:
    """y_j minus the leave-one-out fit at U_j, for every observation."""
    if fit.n != data.n:
        raise DataError("index fit and dataset sizes differ")
    return data.y - loo_fit_all(data.y, fit.ranks_u, cfg)


def smoothed_weights(w_values, fit: IndexFit, cfg: SmootherConfig) -> np.ndarray:
    """Leave-one-out smooth of weight values at each observation's own rank."""
    return loo_fit_all(w_values, fit.ranks_u, cfg)


def empty_window_count(u_ranks, cfg: SmootherConfig) -> int:
    """Number of observations whose leave-one-out kernel window is empty.

    A nonzero count flags undersmoothing: those residuals reduce to the
    raw responses.
    """
    s = loo_matrix(u_ranks, cfg.h, cfg.kernel)
    return int(np.count_nonzero(s.sum(axis=0) == 0.0))


#: Smallest interior subsample a test statistic may run on; below this the
#: interior restriction is abandoned and all observations enter the sums.
MIN_INTERIOR = 5


def interior_mask(u_ranks, h: float, margin: float = 1.0) -> np.ndarray:
    """Boolean mask of observations whose kernel window avoids the rank
    boundary by ``margin * h``.

    Windows that stick out past rank 0 or 1 are truncated, and their
    fitted values carry a mass deficit that leaks the response level into
    residual-based statistics; the test statistics therefore sum over
    interior observations only.  When fewer than MIN_INTERIOR points
    survive, the mask degenerates to all-true.
    """
    u = np.asarray(u_ranks, dtype=float)
    b = margin * h
    keep = (u > b) & (u <= 1.0 - b + 1e-12)
    if int(keep.sum()) < MIN_INTERIOR:
        return np.ones(u.size, dtype=bool)
    return keep
