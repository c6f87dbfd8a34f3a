"""Class-membership predicates for the SDD / SDD1 / S-SDD1 / B1 hierarchy.

Strict inequalities are evaluated exactly; boundary matrices classify as NOT
in the class.  Callers needing robustness against ties must perturb their
input themselves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import IndexPartition, _abs_off, as_index_set, as_matrix, dominance_partition
from .errors import SizeLimitError, WitnessError

__all__ = [
    "B1Split",
    "ClassReport",
    "b1_split",
    "classify",
    "dominance_degrees",
    "find_s_sdd1_witness",
    "is_b1",
    "is_s_sdd1",
    "is_sdd",
    "is_sdd1",
]

WITNESS_SEARCH_MAX = 15  # exhaustive subset search guard on |n2|


@dataclass(frozen=True)
class ClassReport:
    """Summary of every classification for one matrix."""

    is_sdd: bool
    is_sdd1: bool
    s_sdd1_witness: tuple[int, ...] | None
    dominance_degrees: np.ndarray
    partition: IndexPartition

    def __post_init__(self):
        self.dominance_degrees.setflags(write=False)


@dataclass(frozen=True)
class B1Split:
    """Decomposition M = a + c with constant-row shift part c.

    ``r[i]`` is max{0, max of row i's off-diagonal entries}; row i of ``c``
    is constant equal to ``r[i]`` and ``a = M - c`` entrywise.
    """

    a: np.ndarray
    c: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        for arr in (self.a, self.c, self.r):
            arr.setflags(write=False)


def is_sdd(A) -> bool:
    """Strict diagonal dominance: |a_ii| > R_i for every row."""
    part = dominance_partition(A)
    return len(part.n1) == 0


def dominance_degrees(A, partition=None) -> np.ndarray:
    """Per-row margins |a_ii| - P_i; all positive exactly when the matrix is SDD1."""
    A = as_matrix(A)
    part = partition if partition is not None else dominance_partition(A)
    return np.abs(A.diagonal()) - part.p_values


def is_sdd1(A, partition=None) -> bool:
    """Generalized dominance |a_ii| > P_i for every row."""
    return bool((dominance_degrees(A, partition) > 0).all())


def _s_sdd1_margins(A, S) -> np.ndarray:
    """Margins |a_ii| - R^{Sbar}_i - Q^S_i for all rows; S must be validated."""
    A = as_matrix(A)
    n = A.shape[0]
    _, off, d = _abs_off(A)
    S = list(S)
    sbar = [j for j in range(n) if j not in set(S)]
    R = off.sum(axis=1)
    w = R[S] / d[S]
    margins = d.astype(float).copy()
    if sbar:
        margins -= off[:, sbar].sum(axis=1)
    margins -= off[:, S] @ w
    return margins


def _validate_witness(A, S) -> tuple[int, ...]:
    A = as_matrix(A)
    part = dominance_partition(A)
    S = as_index_set(S, A.shape[0], allow_empty=True, name="witness set")
    if not S:
        raise WitnessError("witness set must be nonempty")
    if not set(S) <= set(part.n2):
        raise WitnessError("witness set must be a subset of the dominant row set")
    return S


def is_s_sdd1(A, S) -> bool:
    """S-restricted dominance: |a_ii| - R^{Sbar}_i - Q^S_i > 0 for every row.

    ``S`` must be a nonempty subset of the dominant set n2; otherwise a
    ``WitnessError`` is raised.
    """
    S = _validate_witness(A, S)
    return bool((_s_sdd1_margins(A, S) > 0).all())


def find_s_sdd1_witness(A, partition=None) -> tuple[int, ...] | None:
    """Search for a subset S of n2 making the matrix S-restricted dominant.

    Exhaustive over subsets, largest cardinality first, lexicographically
    first winner reported.  Guarded to |n2| <= 15.
    """
    A = as_matrix(A)
    part = partition if partition is not None else dominance_partition(A)
    n2 = part.n2
    if len(n2) > WITNESS_SEARCH_MAX:
        raise SizeLimitError(
            f"witness search is exhaustive and limited to |n2| <= {WITNESS_SEARCH_MAX}"
        )
    for size in range(len(n2), 0, -1):
        for S in itertools.combinations(n2, size):
            if (_s_sdd1_margins(A, list(S)) > 0).all():
                return S
    return None


def classify(A, search_witness=True) -> ClassReport:
    """Assemble the full class report for one matrix."""
    A = as_matrix(A)
    part = dominance_partition(A)
    degrees = dominance_degrees(A, part)
    witness = None
    if search_witness and part.n2 and len(part.n2) <= WITNESS_SEARCH_MAX:
        witness = find_s_sdd1_witness(A, part)
    return ClassReport(
        is_sdd=len(part.n1) == 0,
        is_sdd1=bool((degrees > 0).all()),
        s_sdd1_witness=witness,
        dominance_degrees=degrees,
        partition=part,
    )


def b1_split(M) -> B1Split:
    """Exact shift decomposition M = a + c; asserts nothing about class membership."""
    M = as_matrix(M)
    n = M.shape[0]
    masked = np.array(M)
    np.fill_diagonal(masked, -np.inf)
    r = np.maximum(0.0, masked.max(axis=1))
    c = np.tile(r[:, None], (1, n))
    a = M - c
    return B1Split(a=a, c=c, r=r)


def is_b1(M) -> bool:
    """True iff the shift part of the split is SDD1 with all-positive diagonal."""
    split = b1_split(M)
    if not (split.a.diagonal() > 0).all():
        return False
    return is_sdd1(split.a)
