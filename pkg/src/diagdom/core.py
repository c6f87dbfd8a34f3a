"""Dense matrix validation, row-sum functionals, and the dominance partition.

Everything downstream consumes these pieces: the restricted row sum
``row_sum``, its damped counterpart ``damped_row_sum`` (each off-diagonal
modulus weighted by the neighbour's dominance ratio R_j/|a_jj|), and the exact
split of the row indices into the non-dominant set ``n1`` and the strictly
dominant set ``n2``.

All indices in this API are 0-based.  The command-line layer converts to
1-based for reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularDiagonalError, ValidationError

__all__ = [
    "IndexPartition",
    "as_index_set",
    "as_matrix",
    "comparison_matrix",
    "damped_row_sum",
    "dominance_partition",
    "row_sum",
]


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a validated square float64 matrix.

    Rejects complex input (the bound machinery is real-valued), non-square
    shapes, and non-finite entries.  Returns a read-only copy so results that
    hold references to it stay immutable.
    """
    arr = np.asarray(a)
    if np.iscomplexobj(arr):
        raise ValidationError("complex matrices are not supported")
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValidationError(f"expected a square matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValidationError("matrix entries must be finite")
    out = arr.copy()
    out.setflags(write=False)
    return out


def as_index_set(indices, n, *, allow_empty=False, name="index set") -> tuple[int, ...]:
    """Normalize an iterable of row indices to a strictly increasing tuple."""
    raw = [int(i) for i in indices]
    if len(set(raw)) != len(raw):
        raise ValidationError(f"{name} contains duplicate indices")
    idx = tuple(sorted(raw))
    if not idx:
        if allow_empty:
            return idx
        raise ValidationError(f"{name} must not be empty")
    if idx[0] < 0 or idx[-1] >= n:
        raise ValidationError(f"{name} has indices outside 0..{n - 1}")
    return idx


@dataclass(frozen=True)
class IndexPartition:
    """Exact dominant/non-dominant row split with cached row functionals.

    ``row_sums[i]`` is R_i, the full off-diagonal absolute row sum, and
    ``p_values[i]`` is P_i = R^{n1}_i + Q^{n2}_i: full weight for columns in
    the non-dominant set, damped weight R_j/|a_jj| for columns in the
    dominant set.  Membership is decided by the exact comparison
    |a_ii| <= R_i, with no tolerance.
    """

    n1: tuple[int, ...]
    n2: tuple[int, ...]
    row_sums: np.ndarray
    p_values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.row_sums)


def _abs_off(A):
    """Return (|A|, |A| with zeroed diagonal, |diagonal|)."""
    absA = np.abs(A)
    off = absA.copy()
    np.fill_diagonal(off, 0.0)
    return absA, off, absA.diagonal().copy()


def row_sum(A, i, subset=None) -> float:
    """Restricted absolute row sum R^S_i: sum of |a_ij| over j in S, j != i.

    ``subset=None`` means the full index range, giving R_i.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if not 0 <= int(i) < n:
        raise ValidationError(f"row index {i} outside 0..{n - 1}")
    i = int(i)
    if subset is None:
        cols = range(n)
    else:
        cols = as_index_set(subset, n, allow_empty=True, name="subset")
    return float(sum(abs(A[i, j]) for j in cols if j != i))


def damped_row_sum(A, i, subset, partition=None) -> float:
    """Damped restricted row sum Q^S_i: sum of |a_ij| * R_j / |a_jj| over j in S, j != i.

    Every j in the subset (other than i) must have a nonzero diagonal.
    ``partition`` may carry precomputed row sums to avoid recomputation.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if not 0 <= int(i) < n:
        raise ValidationError(f"row index {i} outside 0..{n - 1}")
    i = int(i)
    cols = as_index_set(subset, n, allow_empty=True, name="subset")
    if partition is not None and partition.n == n:
        R = partition.row_sums
    else:
        _, off, _ = _abs_off(A)
        R = off.sum(axis=1)
    total = 0.0
    for j in cols:
        if j == i:
            continue
        ajj = abs(A[j, j])
        if ajj == 0.0:
            raise SingularDiagonalError(f"zero diagonal at index {j} inside damped row sum")
        total += abs(A[i, j]) * R[j] / ajj
    return float(total)


def dominance_partition(A) -> IndexPartition:
    """Split rows into non-dominant ``n1`` (|a_ii| <= R_i) and dominant ``n2``."""
    A = as_matrix(A)
    _, off, d = _abs_off(A)
    R = off.sum(axis=1)
    n2_mask = d > R
    n1 = tuple(int(i) for i in np.where(~n2_mask)[0])
    n2 = tuple(int(i) for i in np.where(n2_mask)[0])
    w = np.zeros(A.shape[0])
    if n2:
        idx = list(n2)
        w[idx] = R[idx] / d[idx]
    P = off[:, list(n1)].sum(axis=1) if n1 else np.zeros(A.shape[0])
    if n2:
        P = P + off[:, list(n2)] @ w[list(n2)]
    R.setflags(write=False)
    P.setflags(write=False)
    return IndexPartition(n1=n1, n2=n2, row_sums=R, p_values=P)


def comparison_matrix(A) -> np.ndarray:
    """Entrywise comparison matrix: |a_ii| on the diagonal, -|a_ij| elsewhere."""
    A = as_matrix(A)
    out = -np.abs(A)
    np.fill_diagonal(out, np.abs(A.diagonal()))
    return out
