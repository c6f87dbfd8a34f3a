"""Exact dense reference computations used to verify every certified bound.

These are the floating-point oracles: LU with partial pivoting, inverse,
determinant, infinity norm, and the exponential-cost structural scans
(principal minors, comparison-matrix inverse nonnegativity).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import as_matrix, comparison_matrix
from .errors import SingularMatrixError, SizeLimitError

__all__ = [
    "LuFactorization",
    "determinant",
    "inf_norm",
    "inverse",
    "is_h_matrix",
    "is_p_matrix",
    "lu_factor",
    "lu_solve",
]

# Module-level tolerance knobs.  Fixed constants at desk scale; override in
# one place if a different regime is ever needed.
SINGULAR_PIVOT_RTOL = 1e-13  # pivot threshold relative to the matrix infinity norm
INVERSE_NONNEG_TOL = 1e-10   # entrywise slack for inverse-nonnegativity tests
P_MATRIX_MAX_ORDER = 20      # hard guard for the 2^n principal-minor scan


@dataclass(frozen=True)
class LuFactorization:
    """Packed LU factors with the row permutation applied by partial pivoting.

    ``packed`` holds the strict lower triangle of L (unit diagonal implied)
    and the full upper triangle of U.  Row ``k`` of the factorization
    corresponds to original row ``perm[k]``, and ``sign`` is the permutation
    parity, so det(A) = sign * prod(diag(U)).
    """

    packed: np.ndarray
    perm: tuple[int, ...]
    sign: int

    def __post_init__(self):
        self.packed.setflags(write=False)

    @property
    def lower(self) -> np.ndarray:
        L = np.tril(self.packed, -1)
        np.fill_diagonal(L, 1.0)
        return L

    @property
    def upper(self) -> np.ndarray:
        return np.triu(self.packed)


def inf_norm(A) -> float:
    """Maximum absolute row sum."""
    A = as_matrix(A)
    return float(np.abs(A).sum(axis=1).max())


def lu_factor(A) -> LuFactorization:
    """LU factorization with partial pivoting.

    A pivot of modulus at most ``SINGULAR_PIVOT_RTOL`` times the matrix
    infinity norm stops the elimination with a ``SingularMatrixError`` that
    names the failing column; near-singular input is never silently factored.
    """
    A = as_matrix(A)
    n = A.shape[0]
    lu = np.array(A)
    perm = np.arange(n)
    sign = 1
    thresh = SINGULAR_PIVOT_RTOL * float(np.abs(A).sum(axis=1).max())
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) <= thresh:
            raise SingularMatrixError(f"singular pivot in column {k}", column=k)
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            sign = -sign
        if k + 1 < n:
            lu[k + 1:, k] /= lu[k, k]
            lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return LuFactorization(packed=lu, perm=tuple(int(i) for i in perm), sign=sign)


def lu_solve(fact: LuFactorization, b) -> np.ndarray:
    """Solve A x = b given a factorization of A. ``b`` may be a vector or matrix."""
    b = np.asarray(b, dtype=np.float64)
    vector = b.ndim == 1
    B = b[:, None] if vector else b.copy()
    n = fact.packed.shape[0]
    X = np.array(B[list(fact.perm)], dtype=np.float64)
    lu = fact.packed
    for k in range(1, n):  # forward substitution, unit lower triangle
        X[k] -= lu[k, :k] @ X[:k]
    for k in range(n - 1, -1, -1):  # back substitution
        if k + 1 < n:
            X[k] -= lu[k, k + 1:] @ X[k + 1:]
        X[k] /= lu[k, k]
    return X[:, 0] if vector else X


def determinant(A) -> float:
    """Determinant via the pivoted LU product; singular input yields 0.0."""
    A = as_matrix(A)
    if A.shape[0] == 1:
        return float(A[0, 0])
    try:
        fact = lu_factor(A)
    except SingularMatrixError:
        return 0.0
    return float(fact.sign * np.prod(fact.packed.diagonal()))


def inverse(A) -> np.ndarray:
    """Matrix inverse; raises ``SingularMatrixError`` on singular input.

    Backed by LAPACK through numpy for speed; the hand-rolled factorization
    above stays the authority for pivot-level diagnostics.
    """
    A = as_matrix(A)
    try:
        inv = np.linalg.inv(A)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(str(exc)) from exc
    if not np.isfinite(inv).all():
        raise SingularMatrixError("inverse overflowed; matrix is numerically singular")
    return inv


def is_p_matrix(A) -> bool:
    """True iff every principal minor is strictly positive.

    Scans all 2^n - 1 principal submatrices in order of increasing size and
    stops at the first non-positive minor.  Guarded to order
    ``P_MATRIX_MAX_ORDER`` because of the exponential cost.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if n > P_MATRIX_MAX_ORDER:
        raise SizeLimitError(
            f"principal-minor scan is limited to order {P_MATRIX_MAX_ORDER}, got {n}"
        )
    if (A.diagonal() <= 0).any():
        return False
    for size in range(2, n + 1):
        for rows in itertools.combinations(range(n), size):
            sub = A[np.ix_(rows, rows)]
            if determinant(sub) <= 0.0:
                return False
    return True


def is_h_matrix(A) -> bool:
    """True iff the comparison matrix has a (numerically) nonnegative inverse.

    For Z-matrices this inverse-nonnegativity test is equivalent to being a
    nonsingular M-matrix, so it avoids any eigensolver.  Singular comparison
    matrices report False.
    """
    comp = comparison_matrix(A)
    try:
        inv = inverse(comp)
    except SingularMatrixError:
        return False
    return bool((inv >= -INVERSE_NONNEG_TOL).all())
