"""Bound certificates: a computed bound plus the context needed to audit it."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

__all__ = [
    "FORMULA_DET_HUANG",
    "FORMULA_DET_NEW",
    "FORMULA_LCP_B1",
    "FORMULA_SDD1_EPSILON",
    "FORMULA_SDD1_SCHUR",
    "FORMULA_SDD_PAIRWISE",
    "FORMULA_S_SDD1_SCHUR",
    "BoundCertificate",
]

# Stable formula identifiers used in reports.
FORMULA_SDD_PAIRWISE = "SDD_PAIRWISE"
FORMULA_SDD1_EPSILON = "SDD1_EPSILON"
FORMULA_SDD1_SCHUR = "SDD1_SCHUR"
FORMULA_S_SDD1_SCHUR = "S_SDD1_SCHUR"
FORMULA_DET_HUANG = "DET_HUANG"
FORMULA_DET_NEW = "DET_NEW"
FORMULA_LCP_B1 = "LCP_B1"


@dataclass(frozen=True)
class BoundCertificate:
    """A named bound value with its parameters and, optionally, the oracle value.

    ``slack`` is bound minus oracle; a certificate whose slack dips below
    -1e-9 is a correctness failure, never something to clamp away.
    """

    formula_id: str
    value: float
    parameters: dict = field(default_factory=dict)
    exact_value: float | None = None

    @property
    def slack(self) -> float | None:
        if self.exact_value is None:
            return None
        return self.value - self.exact_value

    def with_exact(self, exact_value: float) -> "BoundCertificate":
        return dataclasses.replace(self, exact_value=float(exact_value))
