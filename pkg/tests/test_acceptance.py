"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Reference values recorded to four decimals are checked at absolute 5e-4,
one-decimal values at 0.05.  Three recorded values (marked KNOWN-IRREPRODUCIBLE
below) could not be reproduced from their printed matrices by any faithful
evaluation; the assertions stand as written and fail honestly rather than
being loosened.  See the repository README for the summary.
"""

import itertools

import numpy as np

from diagdom import (
    HypothesisError,
    b1_split,
    bracket_nesting_check,
    certified_bound_alpha_equals_n2,
    corner_norms,
    determinant,
    dominance_bracket,
    dominance_ordering,
    dominance_partition,
    huang_bracket,
    inf_norm,
    inverse,
    is_sdd,
    is_sdd1,
    lcp_b1_bound,
    quotient_formula_check,
    run_experiment,
    s_sdd1_schur_bound,
    schur_complement,
    sdd1_epsilon_bound,
    sdd1_schur_bound,
    tilde_set_identity_check,
)
from matrices import (
    DET_6X6_FIRST,
    DET_6X6_FIRST_DET,
    DET_6X6_FIRST_HUANG,
    DET_6X6_FIRST_RATIO,
    DET_6X6_SECOND,
    DET_6X6_SECOND_DET,
    DET_6X6_SECOND_HUANG,
    DET_6X6_SECOND_RATIO,
    LCP_8X8,
    LCP_8X8_BOUND,
    LCP_8X8_LITERATURE_ALTERNATIVE,
    NORM_8X8,
    NORM_8X8_EPSILON,
    NORM_8X8_EPSILON_BOUND,
    NORM_8X8_EPSILON_SUP,
    NORM_8X8_EXACT,
    NORM_8X8_SCHUR_BOUND,
    SCHUR_5X5,
    SCHUR_5X5_COMPLEMENT,
    SCHUR_6X6,
    SCHUR_6X6_COMPLEMENT,
    SCHUR_6X6_DEGREES,
    SINGLE_N2,
    SINGLE_N2_B1,
    TOL1,
    TOL4,
)


def _finish(name, failures):
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else "  [" + "; ".join(failures) + "]"
    print(f"ACCEPTANCE {name}: {status}{detail}")
    assert not failures, f"{name}: {failures}"


def _check(failures, label, ok):
    if not ok:
        failures.append(label)


def test_criterion_1_norm_bound_regression():
    failures = []
    schur_cert = sdd1_schur_bound(NORM_8X8)
    # KNOWN-IRREPRODUCIBLE: the recorded 7.6167 is off by 2.7e-3 from any
    # faithful evaluation of the printed matrix (we compute 7.6194).
    _check(failures, f"schur bound {schur_cert.value:.4f} vs {NORM_8X8_SCHUR_BOUND}",
           abs(schur_cert.value - NORM_8X8_SCHUR_BOUND) <= TOL4)

    eps_cert = sdd1_epsilon_bound(NORM_8X8, NORM_8X8_EPSILON)
    # KNOWN-IRREPRODUCIBLE: recorded 11.1572, we compute 11.2031.
    _check(failures, f"epsilon bound {eps_cert.value:.4f} vs {NORM_8X8_EPSILON_BOUND}",
           abs(eps_cert.value - NORM_8X8_EPSILON_BOUND) <= TOL4)

    sup = eps_cert.parameters["interval_sup"]
    _check(failures, f"interval sup {sup:.4f} vs {NORM_8X8_EPSILON_SUP}",
           abs(sup - NORM_8X8_EPSILON_SUP) <= TOL4)

    exact = inf_norm(inverse(NORM_8X8))
    # KNOWN-IRREPRODUCIBLE: recorded 3.3042, the printed matrix gives 3.0344.
    _check(failures, f"exact norm {exact:.4f} vs {NORM_8X8_EXACT}",
           abs(exact - NORM_8X8_EXACT) <= TOL4)
    _finish("criterion 1 (norm-bound regression)", failures)


def test_criterion_2_lcp_regression():
    failures = []
    cert = lcp_b1_bound(LCP_8X8)
    _check(failures, f"lcp bound {cert.value:.4f} vs {LCP_8X8_BOUND}",
           abs(cert.value - LCP_8X8_BOUND) <= TOL4)

    exp = run_experiment(LCP_8X8, 5000, seed=20260809)
    _check(failures, f"violations {exp.violations}", exp.violations == 0)

    part = dominance_partition(LCP_8X8)
    all_certs = [
        cert,
        sdd1_schur_bound(LCP_8X8),
        sdd1_epsilon_bound(LCP_8X8),
        s_sdd1_schur_bound(LCP_8X8, part.n2),
    ]
    for c in all_certs:
        _check(failures, f"{c.formula_id} {c.value:.4f} exceeds literature alternative",
               c.value <= LCP_8X8_LITERATURE_ALTERNATIVE)
    _finish("criterion 2 (LCP regression)", failures)


def test_criterion_3_det_regression_first():
    failures = []
    broad = huang_bracket(DET_6X6_FIRST)
    # KNOWN-IRREPRODUCIBLE pair: recorded [0.099, 125.8959]; the formula the
    # recorded computation itself displays gives [0.0741, 140.8500].
    _check(failures, f"huang lower {broad.lower:.4f} vs {DET_6X6_FIRST_HUANG[0]}",
           abs(broad.lower - DET_6X6_FIRST_HUANG[0]) <= TOL4)
    _check(failures, f"huang upper {broad.upper:.4f} vs {DET_6X6_FIRST_HUANG[1]}",
           abs(broad.upper - DET_6X6_FIRST_HUANG[1]) <= TOL4)

    tight = dominance_bracket(DET_6X6_FIRST)
    _check(failures, f"ratio lower {tight.lower:.4f}",
           abs(tight.lower - DET_6X6_FIRST_RATIO[0]) <= TOL4)
    _check(failures, f"ratio upper {tight.upper:.4f}",
           abs(tight.upper - DET_6X6_FIRST_RATIO[1]) <= TOL4)

    exact = abs(determinant(DET_6X6_FIRST))
    _check(failures, f"determinant {exact:.4f}", abs(exact - DET_6X6_FIRST_DET) <= TOL4)
    _check(failures, "nesting chain", bracket_nesting_check(DET_6X6_FIRST))
    _finish("criterion 3 (determinant regression, first matrix)", failures)


def test_criterion_4_det_regression_second():
    failures = []
    broad = huang_bracket(DET_6X6_SECOND)
    _check(failures, f"huang lower {broad.lower:.4f} vs {DET_6X6_SECOND_HUANG[0]}",
           abs(broad.lower - DET_6X6_SECOND_HUANG[0]) <= TOL1)
    # KNOWN-IRREPRODUCIBLE: recorded 1311.3, the displayed formula gives 1350.
    _check(failures, f"huang upper {broad.upper:.1f} vs {DET_6X6_SECOND_HUANG[1]}",
           abs(broad.upper - DET_6X6_SECOND_HUANG[1]) <= TOL1)

    tight = dominance_bracket(DET_6X6_SECOND)
    _check(failures, f"ratio lower {tight.lower:.1f}",
           abs(tight.lower - DET_6X6_SECOND_RATIO[0]) <= TOL1)
    _check(failures, f"ratio upper {tight.upper:.1f}",
           abs(tight.upper - DET_6X6_SECOND_RATIO[1]) <= TOL1)

    exact = abs(determinant(DET_6X6_SECOND))
    _check(failures, f"determinant {exact}", abs(exact - DET_6X6_SECOND_DET) <= 1e-6)
    _check(failures, "nesting chain", bracket_nesting_check(DET_6X6_SECOND))
    _finish("criterion 4 (determinant regression, second matrix)", failures)


def test_criterion_5_schur_regression():
    failures = []
    res = schur_complement(SCHUR_6X6, [0, 1])
    _check(failures, "all 16 complement entries",
           np.abs(res.complement - SCHUR_6X6_COMPLEMENT).max() <= TOL4)

    cpart = dominance_partition(res.complement)
    degrees = np.abs(res.complement.diagonal()) - cpart.p_values
    _check(failures, f"dominance degrees {np.round(degrees, 4)}",
           np.abs(degrees - SCHUR_6X6_DEGREES).max() <= TOL4)
    _check(failures, "complement stays SDD1", is_sdd1(res.complement))
    _finish("criterion 5 (elimination regression, 6x6)", failures)


def test_criterion_6_elimination_regression_5x5():
    failures = []
    res = schur_complement(SCHUR_5X5, [0])
    _check(failures, "complement exact", np.array_equal(res.complement, SCHUR_5X5_COMPLEMENT))
    _check(failures, f"tilde n1 {res.tilde_n1}", res.tilde_n1 == (4,))
    _check(failures, f"tilde n2 {res.tilde_n2}", res.tilde_n2 == (1, 2, 3))
    _check(failures, "set identities", tilde_set_identity_check(SCHUR_5X5, [0]))
    _finish("criterion 6 (elimination regression, 5x5)", failures)


def _proper_subsets(n2):
    for size in range(1, len(n2)):
        yield from itertools.combinations(n2, size)


def _supersets(n2, n1, n):
    for size in range(0, len(n1)):
        for extra in itertools.combinations(n1, size):
            alpha = sorted(n2 + extra)
            if len(alpha) < n:
                yield alpha


def test_criterion_7_property_suite(sdd1_ensemble):
    failures = []
    bad_subset = bad_superset = bad_sandwich = bad_quotient = bad_det = 0
    rng = np.random.default_rng(7)
    for A in sdd1_ensemble:
        n = A.shape[0]
        part = dominance_partition(A)
        degrees = np.abs(A.diagonal()) - part.p_values
        for alpha in _proper_subsets(part.n2):
            res = schur_complement(A, list(alpha))
            cpart = dominance_partition(res.complement)
            cdeg = np.abs(res.complement.diagonal()) - cpart.p_values
            if not (cdeg > 0).all():
                bad_subset += 1
                continue
            exact = {res.alpha_bar[t]: cdeg[t] for t in range(len(res.alpha_bar))}
            for jt, cert in res.certified_lower_bounds.items():
                if not (0 < cert <= exact[jt] + 1e-10 and cert >= degrees[jt] - 1e-10):
                    bad_subset += 1
            if res.delta is not None:
                orig = np.abs(A[np.ix_(res.alpha_bar, res.alpha_bar)])
                got = np.abs(res.complement)
                if not ((got >= orig - res.delta - 1e-9).all()
                        and (got <= orig + res.delta + 1e-9).all()):
                    bad_sandwich += 1
            lhs = determinant(A)
            rhs = determinant(A[np.ix_(res.alpha, res.alpha)]) * determinant(res.complement)
            if abs(lhs - rhs) > 1e-8 * max(1.0, abs(lhs)):
                bad_det += 1
        for alpha in _supersets(part.n2, part.n1, n):
            res = schur_complement(A, alpha)
            if not is_sdd(res.complement):
                bad_superset += 1
        # One nested elimination identity per instance.
        if len(part.n2) >= 2:
            gamma = [part.n2[0]]
            beta = sorted(rng.choice(
                [j for j in range(n) if j != gamma[0]],
                size=min(2, n - 2), replace=False).tolist() + gamma)
            if len(beta) < n and not quotient_formula_check(A, beta, gamma):
                bad_quotient += 1

    _check(failures, f"{bad_subset} inner-subset failures", bad_subset == 0)
    _check(failures, f"{bad_superset} superset closure failures", bad_superset == 0)
    _check(failures, f"{bad_sandwich} entry sandwich failures", bad_sandwich == 0)
    _check(failures, f"{bad_quotient} nested elimination failures", bad_quotient == 0)
    _check(failures, f"{bad_det} determinant identity failures", bad_det == 0)
    _finish("criterion 7 (property suite, 200 instances)", failures)


def test_criterion_8_soundness_suite(sdd1_ensemble, b1_ensemble):
    failures = []
    bad_norm = bad_bracket = bad_lcp = bad_corner = 0
    for A in sdd1_ensemble:
        exact = inf_norm(inverse(A))
        part = dominance_partition(A)
        certs = [sdd1_schur_bound(A), sdd1_epsilon_bound(A)]
        if len(part.n2) >= 2:
            certs.append(s_sdd1_schur_bound(A, part.n2))
        for cert in certs:
            if cert.value < exact - 1e-9:
                bad_norm += 1
        ordered = dominance_ordering(A).apply(A)
        exact_det = abs(determinant(A))
        for br in (huang_bracket(ordered), dominance_bracket(ordered)):
            if not (br.lower <= exact_det * (1 + 1e-9) + 1e-12
                    and exact_det <= br.upper * (1 + 1e-9) + 1e-12):
                bad_bracket += 1

    for M in b1_ensemble:
        a = b1_split(M).a
        exact = inf_norm(inverse(a))
        for cert in (sdd1_schur_bound(a),
                     sdd1_epsilon_bound(a, sdd1_epsilon_bound(a).parameters["epsilon"])):
            if cert.value < exact - 1e-9:
                bad_norm += 1
        ordered = dominance_ordering(a).apply(a)
        exact_det = abs(determinant(a))
        for br in (huang_bracket(ordered), dominance_bracket(ordered)):
            if not (br.lower <= exact_det * (1 + 1e-9) + 1e-12
                    and exact_det <= br.upper * (1 + 1e-9) + 1e-12):
                bad_bracket += 1
        exp = run_experiment(M, 500, seed=808)
        bad_lcp += exp.violations
        if M.shape[0] <= 10:
            if corner_norms(M).max() > exp.analytic_bound + 1e-9:
                bad_corner += 1

    _check(failures, f"{bad_norm} norm certificates below oracle", bad_norm == 0)
    _check(failures, f"{bad_bracket} brackets missing the determinant", bad_bracket == 0)
    _check(failures, f"{bad_lcp} sampled LCP violations", bad_lcp == 0)
    _check(failures, f"{bad_corner} corner violations", bad_corner == 0)
    _finish("criterion 8 (soundness suite)", failures)


def test_criterion_9_degenerate_suite():
    failures = []

    # Strictly dominant input has no non-dominant rows to certify.
    sdd = np.diag([3.0, 4.0, 5.0]) + 0.2
    try:
        certified_bound_alpha_equals_n2(sdd)
        _check(failures, "missing guard for SDD input", False)
    except HypothesisError as exc:
        _check(failures, "guard names the empty class", "n1" in exc.hypothesis)

    # Empty theta candidate set: the global-weight bracket must say so.
    decoupled = np.array([
        [0.0, 0.0, 0.0],
        [1.0, 3.0, 0.5],
        [0.5, 1.0, 3.0],
    ])
    try:
        huang_bracket(decoupled)
        _check(failures, "missing theta guard", False)
    except HypothesisError as exc:
        _check(failures, "theta guard reached", exc.hypothesis == "theta undefined")

    # Single dominant row: the reciprocal substitution stays sound.
    cert = sdd1_schur_bound(SINGLE_N2)
    exact = inf_norm(inverse(SINGLE_N2))
    _check(failures, "single-row substitution sound", cert.value >= exact - 1e-9)

    lcp_cert = lcp_b1_bound(SINGLE_N2_B1)
    sup = corner_norms(SINGLE_N2_B1).max()
    _check(failures, "single-row LCP bound sound", lcp_cert.value >= sup - 1e-9)
    _check(failures, "single-row LCP uses the clamped reciprocal",
           lcp_cert.parameters["phi"] == 1.0)
    _finish("criterion 9 (degenerate-input suite)", failures)
