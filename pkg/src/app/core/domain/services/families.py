"""Built-in initial data families.

Analytic, rapidly decaying real profiles used by the experiments. Each
carries its profile so the reference solver can sample it exactly.
"""

from collections.abc import Callable, Mapping
from typing import Any

import numpy as np

from ..config import DEFAULT_DATUM_SPACING, DEFAULT_SUPPORT_RADIUS
from ..entities import InitialDatum
from ..errors import UsageError

DEFAULT_EPSILON = 0.05

BUILTIN_FAMILIES: frozenset[str] = frozenset(
    {"sech", "gaussian", "zero-mass", "zero-mass-even"}
)
CUSTOM_FAMILY = "custom-csv"


def _sech(x: np.ndarray) -> np.ndarray:
    e = np.exp(-np.abs(x))
    return 2.0 * e / (1.0 + e * e)


def _profile(name: str, epsilon: float, width: float) -> Callable[[np.ndarray], np.ndarray]:
    def profile(x: np.ndarray) -> np.ndarray:
        z = np.asarray(x, dtype=float) / width
        if name == "sech":
            return epsilon * _sech(z)
        if name == "gaussian":
            return epsilon * np.exp(-(z**2))
        if name == "zero-mass":
            # epsilon * sech'(z)
            return -epsilon * _sech(z) * np.tanh(z)
        # epsilon * sech''(z)
        return epsilon * _sech(z) * (2.0 * np.tanh(z) ** 2 - 1.0)

    return profile


def builtin_family(name: str, params: Mapping[str, Any] | None = None) -> InitialDatum:
    """Sample a built-in family.

    Args:
        name: 'sech' (mass eps*pi*width), 'gaussian' (mass eps*sqrt(pi)*width),
            'zero-mass' (eps sech'), 'zero-mass-even' (eps sech''), all in x/width.
        params: Optional 'epsilon', 'width', 'spacing', 'support_radius'.
            The support radius defaults to 40 widths.

    Raises:
        UsageError: For an unknown family, 'custom-csv' (needs a file) or
            invalid parameters.
    """
    params = dict(params or {})
    if name == CUSTOM_FAMILY:
        raise UsageError(name, "custom-csv data must be read from a file")
    if name not in BUILTIN_FAMILIES:
        raise UsageError(name, "Unknown initial data family")
    epsilon = float(params.get("epsilon", DEFAULT_EPSILON))
    width = float(params.get("width", 1.0))
    spacing = float(params.get("spacing", DEFAULT_DATUM_SPACING))
    support = float(params.get("support_radius", DEFAULT_SUPPORT_RADIUS * width))
    if not np.isfinite(epsilon) or width <= 0 or spacing <= 0 or support <= 0:
        raise UsageError(params, "Family parameters must be finite and positive")
    return InitialDatum.from_profile(
        name=name,
        profile=_profile(name, epsilon, width),
        support_radius=support,
        spacing=spacing,
    )
