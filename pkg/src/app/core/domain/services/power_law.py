"""Power-law fitting service.

Least-squares fit of log E = slope * log t + c, used to read decay
exponents off a sequence of sup errors.
"""

from collections.abc import Sequence

import numpy as np

from ..config import MIN_SLOPE_SAMPLES
from ..errors import DegenerateFitError


def fit_slope(ts: Sequence[float], errs: Sequence[float]) -> tuple[float, float]:
    """Fitted exponent and its standard error.

    Raises:
        DegenerateFitError: With fewer than four samples, non-positive
            values, or coincident times.
    """
    t = np.asarray(ts, dtype=float)
    e = np.asarray(errs, dtype=float)
    if t.size != e.size or t.size < MIN_SLOPE_SAMPLES:
        raise DegenerateFitError(t.size, f"Need at least {MIN_SLOPE_SAMPLES} samples")
    if np.any(t <= 0) or np.any(e <= 0) or not np.all(np.isfinite(e)):
        raise DegenerateFitError(e.tolist(), "Samples must be positive and finite")
    log_t, log_e = np.log(t), np.log(e)
    spread = float(np.sum((log_t - log_t.mean()) ** 2))
    if spread == 0.0:
        raise DegenerateFitError(t.tolist(), "Sample times must differ")
    slope, intercept = np.polyfit(log_t, log_e, 1)
    residuals = log_e - (slope * log_t + intercept)
    variance = float(np.sum(residuals**2)) / (t.size - 2)
    return float(slope), float(np.sqrt(variance / spread))


def refinement_ratio(coarse: float, fine: float) -> float:
    """Ratio of successive errors; 2^p for an order-p method under halving."""
    if fine == 0.0:
        raise DegenerateFitError(fine, "Cannot form a ratio with a zero error")
    return coarse / fine
