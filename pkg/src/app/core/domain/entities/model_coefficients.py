"""Model Coefficients Entity.

Coefficients of the large-z expansion of the model RH solution
m^Y(z) = I + m11/z + (m12 + m21)/z^2 + ..., each a 2x2 complex matrix,
plus the Pauli algebra used to state their structure.
"""

from dataclasses import dataclass

import numpy as np

IDENTITY = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI_BASIS = {"I": IDENTITY, "sigma1": SIGMA1, "sigma2": SIGMA2, "sigma3": SIGMA3}


def pauli_components(matrix: np.ndarray) -> dict[str, complex]:
    """Decompose a 2x2 matrix as c0 I + c1 sigma1 + c2 sigma2 + c3 sigma3."""
    return {
        name: complex(np.trace(basis @ matrix) / 2.0) for name, basis in PAULI_BASIS.items()
    }


def off_structure_norm(matrix: np.ndarray, allowed: tuple[str, ...]) -> float:
    """Largest Pauli component of `matrix` outside the `allowed` directions."""
    components = pauli_components(matrix)
    rest = [abs(c) for name, c in components.items() if name not in allowed]
    return max(rest) if rest else 0.0


@dataclass(frozen=True, eq=False)
class ModelCoefficients:
    """Entity holding one evaluation of the model coefficients.

    Attributes:
        y: Similarity variable.
        p1: Real parameter p1.
        p2: Imaginary parameter p2.
        m11: Coefficient of p1 / z.
        m12: Second-order coefficient driven by p1^2 and p2.
        m21: Second-order coefficient linear in p1.
        source: 'closed_form' or 'quadrature'.
    """

    y: float
    p1: float
    p2: complex
    m11: np.ndarray
    m12: np.ndarray
    m21: np.ndarray
    source: str = "closed_form"

    def entries(self) -> dict[str, np.ndarray]:
        """Named coefficient matrices."""
        return {"m11": self.m11, "m12": self.m12, "m21": self.m21}

    def max_norm(self) -> float:
        """Largest entry modulus over all three matrices."""
        return float(max(np.max(np.abs(m)) for m in self.entries().values()))

    def difference(self, other: "ModelCoefficients") -> dict[str, float]:
        """Entrywise max deviation per coefficient."""
        return {
            name: float(np.max(np.abs(mine - other.entries()[name])))
            for name, mine in self.entries().items()
        }
