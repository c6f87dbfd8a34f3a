"""Upper bounds on the infinity norm of the inverse.

Four routes, each returned as a ``BoundCertificate``:

- ``sdd_pairwise_bound``: the classical pairwise bound for strictly
  diagonally dominant matrices;
- ``sdd1_epsilon_bound``: the epsilon-parameterized bound for SDD1 matrices,
  with an optional automatic choice of epsilon;
- ``sdd1_schur_bound``: the elimination-based SDD1 bound built from the
  dominant-block pairwise bound (phi) and the certified dominance of the
  eliminated complement (psi);
- ``s_sdd1_schur_bound``: the same architecture restricted to a witness
  subset S of the dominant rows.

Every bound uses only entries of the original matrix.
"""

from __future__ import annotations

import math

import numpy as np

from .certificates import (
    FORMULA_S_SDD1_SCHUR,
    FORMULA_SDD1_EPSILON,
    FORMULA_SDD1_SCHUR,
    FORMULA_SDD_PAIRWISE,
    BoundCertificate,
)
from .classify import _s_sdd1_margins, _validate_witness, is_sdd, is_sdd1
from .core import _abs_off, as_matrix, dominance_partition
from .errors import HypothesisError, ParameterError
from .oracle import inf_norm, inverse

__all__ = [
    "s_sdd1_schur_bound",
    "sdd1_epsilon_bound",
    "sdd1_schur_bound",
    "sdd_pairwise_bound",
    "with_exact_norm",
]

EPSILON_GRID_POINTS = 256
EPSILON_GRID_MARGIN = 1e-6   # relative margin keeping the grid inside the open interval
EPSILON_REFINE_WIDTH = 1e-10  # golden-section stopping width

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def with_exact_norm(cert: BoundCertificate, A) -> BoundCertificate:
    """Attach the oracle value ||A^{-1}||_inf to a certificate."""
    return cert.with_exact(inf_norm(inverse(A)))


def _pairwise_max(d, rs, rows):
    """max over ordered pairs i != j in ``rows`` of (d_j + rs_i) / (d_i d_j - rs_i rs_j)."""
    best = 0.0
    for i in rows:
        for j in rows:
            if i == j:
                continue
            den = d[i] * d[j] - rs[i] * rs[j]
            assert den > 0.0, "pairwise denominator must be positive on a dominant block"
            best = max(best, (d[j] + rs[i]) / den)
    return best


def sdd_pairwise_bound(A) -> BoundCertificate:
    """Classical pairwise bound for SDD matrices of order at least 2."""
    A = as_matrix(A)
    if A.shape[0] < 2:
        raise HypothesisError("order < 2", "the pairwise bound needs at least two rows")
    if not is_sdd(A):
        raise HypothesisError("matrix is not SDD", "the pairwise bound requires strict dominance")
    _, off, d = _abs_off(A)
    R = off.sum(axis=1)
    value = _pairwise_max(d, R, range(A.shape[0]))
    return BoundCertificate(FORMULA_SDD_PAIRWISE, float(value))


def _epsilon_sup(d, P, rs):
    """Supremum of admissible epsilon; rows without dominant-column mass impose nothing."""
    sup = math.inf
    for i in range(len(d)):
        if rs[i] > 0.0:
            sup = min(sup, (d[i] - P[i]) / rs[i])
    return sup


def _epsilon_pieces(off, d, R, P, n1, n2, rs):
    """Precompute the epsilon-independent pieces; the bound is rational in eps.

    For non-dominant rows the denominator term is ``h0 - eps * rs``; for
    dominant rows it is ``eps * g + q0``.  The zeroed diagonal of ``off``
    makes the j != i exclusions automatic.
    """
    ratio = P[n2] / d[n2]
    h0 = d[n1] - off[np.ix_(n1, n1)].sum(axis=1) - off[np.ix_(n1, n2)] @ ratio
    g = d[n2] - rs[n2]
    q0 = off[np.ix_(n2, n2)] @ ((R[n2] - P[n2]) / d[n2])
    return h0, rs[n1], g, q0, float(ratio.max())


def _epsilon_value(pieces, eps):
    h0, rs1, g, q0, max_ratio = pieces
    den = min((h0 - eps * rs1).min(), (eps * g + q0).min())
    assert den > 0.0, "epsilon denominators are positive on the admissible interval"
    return max(1.0, max_ratio + eps) / den


def _golden_min(f, a, b, width):
    c = b - _INV_PHI * (b - a)
    d_ = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d_)
    while b - a > width:
        if fc < fd:
            b, d_, fd = d_, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d_, fd
            d_ = a + _INV_PHI * (b - a)
            fd = f(d_)
    return (a + b) / 2.0


def sdd1_epsilon_bound(A, epsilon=None) -> BoundCertificate:
    """Epsilon-parameterized SDD1 bound.

    With ``epsilon`` given, evaluates the bound at that value after checking
    it sits strictly inside the admissible open interval.  Without it, a
    256-point grid over the interval (with a tiny relative margin) followed
    by golden-section refinement picks a minimizer; the bound is continuous
    in epsilon but not guaranteed unimodal, so grid-then-refine is the robust
    route.  The chosen epsilon and the interval supremum are recorded in the
    certificate parameters.
    """
    A = as_matrix(A)
    part = dominance_partition(A)
    if not is_sdd1(A, part):
        raise HypothesisError("matrix is not SDD1")
    if not part.n1 or not part.n2:
        raise HypothesisError(
            "n1 or n2 is empty",
            "the epsilon bound mixes terms over both partition sides",
        )
    _, off, d = _abs_off(A)
    n1, n2 = list(part.n1), list(part.n2)
    R, P = part.row_sums, part.p_values
    rs = off[:, n2].sum(axis=1)
    pieces = _epsilon_pieces(off, d, R, P, n1, n2, rs)

    sup = _epsilon_sup(d, P, rs)
    finite_sup = sup
    if not math.isfinite(finite_sup):
        # No row constrains epsilon; cap the search where the numerator's
        # max{1, .} branch has clearly switched to growth.
        finite_sup = max(1.0, 2.0 * (1.0 - (P[n2] / d[n2]).max()))

    if epsilon is not None:
        eps = float(epsilon)
        if not 0.0 < eps < sup:
            raise ParameterError(
                f"epsilon {eps} outside the admissible open interval (0, {sup})"
            )
        value = _epsilon_value(pieces, eps)
        params = {"epsilon": eps, "interval_sup": float(sup), "auto": False}
        return BoundCertificate(FORMULA_SDD1_EPSILON, float(value), params)

    lo = finite_sup * EPSILON_GRID_MARGIN
    hi = finite_sup * (1.0 - EPSILON_GRID_MARGIN)
    grid = np.linspace(lo, hi, EPSILON_GRID_POINTS)
    values = [_epsilon_value(pieces, e) for e in grid]
    k = int(np.argmin(values))
    a = grid[max(0, k - 1)]
    b = grid[min(len(grid) - 1, k + 1)]
    eps = _golden_min(lambda e: _epsilon_value(pieces, e), a, b, EPSILON_REFINE_WIDTH)
    refined = _epsilon_value(pieces, eps)
    if refined > values[k]:
        eps, refined = float(grid[k]), values[k]
    params = {"epsilon": float(eps), "interval_sup": float(sup), "auto": True}
    return BoundCertificate(FORMULA_SDD1_EPSILON, float(refined), params)


def _restricted_schur_value(A, S, prefactor_margins):
    """Shared arithmetic of the elimination-based bounds.

    ``S`` is the dominant block to keep (a list of indices), and
    ``prefactor_margins[i]`` must equal R^{Sbar}_i + Q^S_i for i in S.
    Returns (value, phi, psi); psi is None when S covers every row.
    """
    _, off, d = _abs_off(A)
    n = A.shape[0]
    Sset = set(S)
    sbar = [i for i in range(n) if i not in Sset]
    rs = off[:, list(S)].sum(axis=1)

    if len(S) == 1:
        phi = 1.0 / d[S[0]]
    else:
        phi = _pairwise_max(d, rs, list(S))

    psi = None
    if sbar:
        psi = 0.0
        for i in sbar:
            den = d[i] - off[i, sbar].sum() - (off[i, list(S)] / d[list(S)]) @ prefactor_margins[list(S)]
            assert den > 0.0, "restricted margins are positive under the S-dominance hypothesis"
            psi = max(psi, (1.0 + phi * rs[i]) / den)

    prefactor = 1.0 + float((prefactor_margins[list(S)] / d[list(S)]).max())
    best = phi if psi is None else max(phi, psi)
    return prefactor * best, phi, psi


def sdd1_schur_bound(A) -> BoundCertificate:
    """Elimination-based bound for SDD1 matrices.

    When the non-dominant set is empty the matrix is plainly SDD and the max
    over an empty row set is undefined; the operation then substitutes the
    pairwise SDD bound and records the substitution instead of inventing a
    value.  A single-row dominant set replaces the pairwise term by the
    reciprocal of its diagonal modulus.
    """
    A = as_matrix(A)
    part = dominance_partition(A)
    if not is_sdd1(A, part):
        raise HypothesisError("matrix is not SDD1")
    if not part.n1:
        sub = sdd_pairwise_bound(A)
        params = {"substituted_formula": FORMULA_SDD_PAIRWISE, "reason": "n1 empty"}
        return BoundCertificate(FORMULA_SDD1_SCHUR, sub.value, params)
    # P_i coincides with R^{n1}_i + Q^{n2}_i, the margins the shared core needs.
    value, phi, psi = _restricted_schur_value(A, list(part.n2), part.p_values)
    params = {"phi": float(phi), "psi": float(psi), "s": [int(i) for i in part.n2]}
    return BoundCertificate(FORMULA_SDD1_SCHUR, float(value), params)


def s_sdd1_schur_bound(A, S) -> BoundCertificate:
    """Witness-restricted elimination bound.

    ``S`` must make the matrix S-restricted dominant and contain at least two
    rows.  With ``S`` equal to the full dominant set this is arithmetic-for-
    arithmetic the same computation as ``sdd1_schur_bound``.
    """
    A = as_matrix(A)
    S = _validate_witness(A, S)
    if len(S) < 2:
        raise HypothesisError(
            "|S| < 2",
            "the witness-restricted bound needs at least a pair inside S",
        )
    margins = _s_sdd1_margins(A, list(S))
    if not (margins > 0).all():
        raise HypothesisError(
            "matrix is not S-SDD1 for this witness",
            "every row must satisfy |a_ii| - R^{Sbar}_i - Q^S_i > 0",
        )
    _, _, d = _abs_off(A)
    # margins == d - (R^{Sbar} + Q^S); recover the prefactor ingredient.
    shifted = d - margins
    value, phi, psi = _restricted_schur_value(A, list(S), shifted)
    params = {"phi": float(phi), "s": [int(i) for i in S]}
    if psi is None:
        params["psi"] = None
        params["reason"] = "S complement empty"
    else:
        params["psi"] = float(psi)
    return BoundCertificate(FORMULA_S_SDD1_SCHUR, float(value), params)
