"""Error-bound machinery for linear complementarity problems with B1 matrices.

For a B1 matrix M the quantity of interest is the supremum over diagonal
scalings D with entries in [0, 1] of ||(I - D + D M)^{-1}||_inf, the constant
in the componentwise LCP error bound.  ``lcp_b1_bound`` evaluates the
certified analytic bound from the shift split M = a + c; ``run_experiment``
attacks the same supremum by seeded Monte-Carlo sampling of D and records a
reproducible artifact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificates import FORMULA_LCP_B1, BoundCertificate
from .classify import b1_split, is_b1, is_sdd1, is_s_sdd1
from .core import _abs_off, as_matrix, dominance_partition
from .errors import HypothesisError, SingularMatrixError, SizeLimitError, ValidationError
from .mmio import matrix_digest
from .oracle import inf_norm, inverse

__all__ = [
    "LcpExperiment",
    "corner_norms",
    "lcp_b1_bound",
    "run_experiment",
    "scaled_matrix_sdd1_check",
]

RNG_SCHEME = "pcg64-seedseq-v1"  # per-sample stream: default_rng([seed, index])
VIOLATION_TOL = 1e-9
CORNER_MAX_ORDER = 12


@dataclass(frozen=True)
class LcpExperiment:
    """Record of one seeded sampling run against the analytic bound.

    ``d_samples[k]`` is the k-th diagonal draw (uniform per entry on [0, 1)),
    ``exact_norms[k]`` the matching oracle value ||(I-D+DM)^{-1}||_inf, and
    ``violations`` counts samples exceeding ``analytic_bound`` beyond the
    fixed tolerance; any nonzero count is a correctness failure.
    """

    seed: int
    sample_count: int
    d_samples: np.ndarray
    exact_norms: np.ndarray
    analytic_bound: float
    violations: int
    matrix_digest: str
    generator: str = RNG_SCHEME

    def __post_init__(self):
        self.d_samples.setflags(write=False)
        self.exact_norms.setflags(write=False)

    def to_lines(self) -> list[str]:
        """Line-delimited serialization: one header, then one line per sample."""
        header = (
            f"matrix={self.matrix_digest} seed={self.seed} "
            f"samples={self.sample_count} bound={self.analytic_bound!r} "
            f"generator={self.generator} violations={self.violations}"
        )
        lines = [header]
        for k in range(self.sample_count):
            ds = " ".join(repr(float(v)) for v in self.d_samples[k])
            lines.append(f"{k} {ds} {float(self.exact_norms[k])!r}")
        return lines

    def write(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(self.to_lines()) + "\n")


def _scaled(M, dvec):
    """Form I - D + D M for a diagonal vector d."""
    return np.diag(1.0 - dvec) + dvec[:, None] * M


def lcp_b1_bound(M) -> BoundCertificate:
    """Certified upper bound on max over D in [0,1]^n of ||(I-D+DM)^{-1}||_inf.

    Works entirely on the shift part ``a`` of the split M = a + c.  The
    pairwise term and the eliminated-row term both carry min/max clamps
    against 1 because the scaling can push any row toward the identity.  When
    the shift part c vanishes (every row maximum is nonpositive) the leading
    factor n-1 drops; with a single dominant row the pairwise term becomes
    max{1, 1/a_ii}.  Rows are those of ``a`` throughout.
    """
    M = as_matrix(M)
    n = M.shape[0]
    split = b1_split(M)
    if not ((split.a.diagonal() > 0).all() and is_sdd1(split.a)):
        raise HypothesisError(
            "matrix is not B1",
            "the shift part of the split must be SDD1 with positive diagonal",
        )
    a = split.a
    part = dominance_partition(a)
    _, off, d = _abs_off(a)
    n1, n2 = list(part.n1), list(part.n2)
    R, P = part.row_sums, part.p_values
    rs = off[:, n2].sum(axis=1)

    if len(n2) == 1:
        phi = max(1.0, 1.0 / d[n2[0]])
    else:
        phi = 0.0
        for i in n2:
            for j in n2:
                if i == j:
                    continue
                num = max(1.0, d[j]) + rs[i]
                den = min(1.0, d[i], d[j], d[i] * d[j] - rs[i] * rs[j])
                assert den > 0.0
                phi = max(phi, num / den)

    psi = None
    if n1:
        psi = 0.0
        for i in n1:
            inner = d[i] - off[i, n1].sum() - (off[i, n2] / d[n2]) @ P[n2]
            assert inner > 0.0
            psi = max(psi, (1.0 + phi * rs[i]) / min(1.0, inner))

    zero_shift = bool((split.r == 0.0).all())
    coefficient = 1 if zero_shift else n - 1
    prefactor = 1.0 + float((P[n2] / d[n2]).max())
    best = phi if psi is None else max(phi, psi)
    value = coefficient * prefactor * best
    params = {
        "coefficient": coefficient,
        "zero_shift": zero_shift,
        "phi": float(phi),
        "psi": None if psi is None else float(psi),
        "prefactor": prefactor,
    }
    if psi is None:
        params["reason"] = "n1 empty"
    return BoundCertificate(FORMULA_LCP_B1, float(value), params)


def run_experiment(M, sample_count, seed) -> LcpExperiment:
    """Sample diagonal scalings and compare every exact norm to the bound.

    Each sample k draws its diagonal from an independent deterministic stream
    keyed by (seed, k), so the record is identical no matter how samples are
    scheduled.  A singular scaled matrix cannot occur for genuine B1 input
    (those scalings of P-matrices stay nonsingular), so such an error
    propagates with the sample index attached.
    """
    M = as_matrix(M)
    if int(sample_count) < 1:
        raise ValidationError("sample_count must be at least 1")
    sample_count = int(sample_count)
    seed = int(seed) & (2**64 - 1)
    if not is_b1(M):
        raise HypothesisError("matrix is not B1")
    bound = lcp_b1_bound(M).value
    n = M.shape[0]
    d_samples = np.empty((sample_count, n))
    exact = np.empty(sample_count)
    for k in range(sample_count):
        rng = np.random.default_rng([seed, k])
        dvec = rng.random(n)
        d_samples[k] = dvec
        try:
            exact[k] = inf_norm(inverse(_scaled(M, dvec)))
        except SingularMatrixError as exc:
            raise SingularMatrixError(
                f"sample {k}: scaled matrix is singular, input violates the B1 contract"
            ) from exc
    violations = int((exact > bound + VIOLATION_TOL).sum())
    return LcpExperiment(
        seed=seed,
        sample_count=sample_count,
        d_samples=d_samples,
        exact_norms=exact,
        analytic_bound=float(bound),
        violations=violations,
        matrix_digest=matrix_digest(M),
    )


def corner_norms(M) -> np.ndarray:
    """Exact norms at every extreme scaling D in {0,1}^n, in bit order.

    Guarded to order ``CORNER_MAX_ORDER`` (the sweep is exponential).
    """
    M = as_matrix(M)
    n = M.shape[0]
    if n > CORNER_MAX_ORDER:
        raise SizeLimitError(f"corner sweep is limited to order {CORNER_MAX_ORDER}, got {n}")
    out = np.empty(2**n)
    for bits in range(2**n):
        dvec = np.array([(bits >> i) & 1 for i in range(n)], dtype=float)
        out[bits] = inf_norm(inverse(_scaled(M, dvec)))
    return out


def scaled_matrix_sdd1_check(A, dvec) -> bool:
    """Verify the structural claims about B = I - D + D A for SDD1 input.

    Requires A to be SDD1 with positive diagonal and every diagonal entry of
    D in [0, 1].  Checks, in one conjunction: B stays SDD1 with positive
    diagonal, scaling never demotes a dominant row (n2(A) inside n2(B), so
    n1(B) inside n1(A)), and B is S-restricted dominant with witness n2(A).
    """
    A = as_matrix(A)
    part = dominance_partition(A)
    if not ((A.diagonal() > 0).all() and is_sdd1(A, part)):
        raise HypothesisError(
            "matrix is not SDD1 with positive diagonal",
            "the scaling-structure checks need positive diagonal SDD1 input",
        )
    dvec = np.asarray(dvec, dtype=float)
    if dvec.shape != (A.shape[0],) or ((dvec < 0) | (dvec > 1)).any():
        raise ValidationError("scaling vector must lie in [0,1]^n")
    B = _scaled(A, dvec)
    bpart = dominance_partition(B)
    checks = (
        is_sdd1(B, bpart)
        and (B.diagonal() > 0).all()
        and set(bpart.n1) <= set(part.n1)
        and set(part.n2) <= set(bpart.n2)
        and is_s_sdd1(B, part.n2)
    )
    return bool(checks)
