"""Convention Choice Value Object.

One candidate of the sign-convention probe: how s is read off r(0) and
which sign the potential of the scattering problem carries.
"""

from dataclasses import dataclass
from typing import Literal

from ..errors import UsageError

SConvention = Literal["r0", "i_r0"]

VALID_S_CONVENTIONS: frozenset[str] = frozenset({"r0", "i_r0"})


@dataclass(frozen=True)
class ConventionChoice:
    """Immutable convention candidate and its probe outcome.

    Attributes:
        s_convention: 'r0' for s = r(0), 'i_r0' for s = i r(0).
        potential_sign: +1 for q = i u, -1 for q = -i u.
        error: Sup error of the leading term against the PDE, None if not run.
        admissible: Whether the candidate yields valid Stokes data.
        reason: Why an inadmissible candidate was rejected.
    """

    s_convention: SConvention
    potential_sign: int
    error: float | None = None
    admissible: bool = True
    reason: str = ""

    def __post_init__(self) -> None:
        """Validate the candidate labels."""
        if self.s_convention not in VALID_S_CONVENTIONS:
            raise UsageError(self.s_convention, "Unknown s convention")
        if self.potential_sign not in (1, -1):
            raise UsageError(self.potential_sign, "Potential sign must be +1 or -1")

    @classmethod
    def default(cls) -> "ConventionChoice":
        """The fixed convention: s = r(0), q = i u."""
        return cls(s_convention="r0", potential_sign=1)

    @property
    def label(self) -> str:
        """Short identifier, e.g. 'r0/+'."""
        return f"{self.s_convention}/{'+' if self.potential_sign > 0 else '-'}"

    def is_default(self) -> bool:
        """Whether this is the fixed convention."""
        return self.s_convention == "r0" and self.potential_sign == 1

    def map_s(self, r0: complex) -> complex:
        """Stokes parameter implied by r(0) under this convention."""
        return complex(r0) if self.s_convention == "r0" else 1j * complex(r0)
