"""Ortho-infimum and ortho-supremum on Hermitian matrices, their defining
properties, uniqueness falsification, and a randomized search for common
lower bounds that beat the ortho-infimum (the anti-lattice phenomenon).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComparablePair
from .linalg import (
    frob,
    hermitian_eigendecompose,
    hermitian_matrix,
    is_comparable,
    jordan_decompose,
    matrix_to_json,
    psd_defect,
    rel_diff,
    random_hermitian,
    rng_for,
    zero_product_residual,
)
from .orthogonality import OrthReport
from .tolerances import DEFAULT_TOL, Tolerances

__all__ = [
    "ortho_inf",
    "ortho_sup",
    "verify_theorem4",
    "uniqueness_falsify",
    "WitnessResult",
    "kadison_witness_search",
]


def ortho_inf(a, b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """(a + b - |a - b|) / 2, the ortho-infimum."""
    ah, bh = hermitian_matrix(a), hermitian_matrix(b)
    _, _, abs_diff = jordan_decompose(ah - bh, tol)
    return (ah + bh - abs_diff) / 2.0


def ortho_sup(a, b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """(a + b + |a - b|) / 2, the ortho-supremum."""
    ah, bh = hermitian_matrix(a), hermitian_matrix(b)
    _, _, abs_diff = jordan_decompose(ah - bh, tol)
    return (ah + bh + abs_diff) / 2.0


def verify_theorem4(a, b, tol: Tolerances = DEFAULT_TOL) -> OrthReport:
    """Checks the defining properties of the ortho-infimum c and
    ortho-supremum d for the pair (a, b):

    c <= a, c <= b, (a-c) orth (b-c); a <= d, b <= d, (d-a) orth (d-b);
    the residual identities a-c = (a-b)^+ and b-c = (a-b)^-; and the
    duality sup(a,b) = -inf(-a,-b).
    """
    ah, bh = hermitian_matrix(a), hermitian_matrix(b)
    xp, xn, abs_x = jordan_decompose(ah - bh, tol)
    c = (ah + bh - abs_x) / 2.0
    d = (ah + bh + abs_x) / 2.0

    details = [
        ("c_le_a", psd_defect(ah - c, tol)),
        ("c_le_b", psd_defect(bh - c, tol)),
        ("inf_residuals_orth", zero_product_residual(ah - c, bh - c)),
        ("a_le_d", psd_defect(d - ah, tol)),
        ("b_le_d", psd_defect(d - bh, tol)),
        ("sup_residuals_orth", zero_product_residual(d - ah, d - bh)),
        ("a_minus_c_is_pos_part", rel_diff(ah - c, xp)),
        ("b_minus_c_is_neg_part", rel_diff(bh - c, xn)),
        ("sup_duality", rel_diff(d, -ortho_inf(-ah, -bh, tol))),
        ("inf_plus_sup", rel_diff(c + d, ah + bh)),
        ("sup_minus_inf", rel_diff(d - c, abs_x)),
    ]
    # cone defects compare against tol_psd, products against tol_zero,
    # equalities against tol_eq; normalize to a single governing tolerance
    bounds = {
        "c_le_a": tol.tol_psd, "c_le_b": tol.tol_psd,
        "a_le_d": tol.tol_psd, "b_le_d": tol.tol_psd,
        "inf_residuals_orth": tol.tol_zero, "sup_residuals_orth": tol.tol_zero,
    }
    holds = all(r <= bounds.get(name, tol.tol_eq) for name, r in details)
    worst = max(r for _, r in details)
    return OrthReport("theorem4", holds, worst, details)


def uniqueness_falsify(a, b, trials: int = 100, seed: int = 0,
                       tol: Tolerances = DEFAULT_TOL) -> OrthReport:
    """Random perturbations of the ortho-infimum must each break one of its
    three defining conditions; holds iff no perturbation survives.

    max_violation is 0.0 when every perturbation is properly falsified and
    1.0 if any survives all three toleranced checks.
    """
    ah, bh = hermitian_matrix(a), hermitian_matrix(b)
    c = ortho_inf(ah, bh, tol)
    gap = frob(ah - bh)
    if gap <= tol.tol_eq:
        # a = b: every admissible perturbation magnitude window is empty
        return OrthReport("uniqueness_falsify", True, 0.0,
                          [("survivors", 0.0), ("min_margin", np.inf)])
    n = ah.shape[0]
    survivors = 0
    min_margin = np.inf
    for i in range(trials):
        rng = rng_for(seed, i)
        delta = random_hermitian(n, rng)
        delta *= rng.uniform(1e-4, 1.0) * gap / max(frob(delta), 1e-300)
        ci = c + delta
        margins = (
            psd_defect(ah - ci, tol) / tol.tol_psd,
            psd_defect(bh - ci, tol) / tol.tol_psd,
            zero_product_residual(ah - ci, bh - ci) / tol.tol_zero,
        )
        margin = max(margins)  # > 1 means at least one condition is broken
        min_margin = min(min_margin, margin)
        if margin <= 1.0:
            survivors += 1
    return OrthReport("uniqueness_falsify", survivors == 0, float(survivors),
                      [("survivors", float(survivors)),
                       ("min_margin", float(min_margin))])


@dataclass
class WitnessResult:
    """Outcome of the common-lower-bound search below a non-comparable pair."""

    found: bool
    m: np.ndarray
    margin: float
    checks: dict

    def to_json(self) -> dict:
        return {
            "found": bool(self.found),
            "m": matrix_to_json(self.m),
            "margin": float(self.margin),
            "checks": {k: float(v) for k, v in self.checks.items()},
        }


def _min_eig(x, tol):
    return float(hermitian_eigendecompose(x, tol).eigenvalues[0])


def _max_eig(x, tol):
    return float(hermitian_eigendecompose(x, tol).eigenvalues[-1])


def kadison_witness_search(s, t, iters: int = 2000, restarts: int = 16,
                           seed: int = 0, margin_min: float = 1e-3,
                           tol: Tolerances = DEFAULT_TOL) -> WitnessResult:
    """Searches for a Hermitian m with m <= S, m <= T but m not<= S inf T.

    Such an m shows the ortho-infimum is not a greatest lower bound when S
    and T are non-comparable. Penalty-based randomized descent: maximize
    -lambda_min(c - m) with the two upper-bound constraints as 1e3-weighted
    penalties, over `restarts` independent starts.
    """
    sh, th = hermitian_matrix(s), hermitian_matrix(t)
    if is_comparable(sh, th, tol):
        raise ComparablePair("S and T are comparable; their minimum is the infimum")
    c = ortho_inf(sh, th, tol)
    n = sh.shape[0]
    penalty = 1e3

    def score(m):
        viol = -_min_eig(c - m, tol)
        pen = max(0.0, _max_eig(m - sh, tol)) + max(0.0, _max_eig(m - th, tol))
        return viol - penalty * pen

    base = min(_min_eig(sh, tol), _min_eig(th, tol)) - 0.5
    best_m = None
    best_margin = -np.inf
    for r in range(restarts):
        rng = rng_for(seed, r)
        m = base * np.eye(n, dtype=complex) + 0.05 * random_hermitian(n, rng)
        cur = score(m)
        step = 0.3
        stall = 0
        for _ in range(iters):
            cand = m + step * random_hermitian(n, rng)
            sc = score(cand)
            if sc > cur:
                m, cur = cand, sc
                stall = 0
            else:
                stall += 1
                if stall >= 25:
                    step *= 0.5
                    stall = 0
                    if step < 1e-8:
                        break
        # repair residual constraint violations by a uniform downward shift
        shift = max(0.0, _max_eig(m - sh, tol), _max_eig(m - th, tol))
        if shift > 0.0:
            m = m - shift * np.eye(n, dtype=complex)
        margin = -_min_eig(c - m, tol)
        if margin > best_margin:
            best_margin, best_m = margin, m

    checks = {
        "le_S": _max_eig(best_m - sh, tol),
        "le_T": _max_eig(best_m - th, tol),
        "not_le_c": _min_eig(c - best_m, tol),
    }
    feasible = checks["le_S"] <= tol.tol_psd * max(1.0, frob(sh)) and \
        checks["le_T"] <= tol.tol_psd * max(1.0, frob(th))
    found = feasible and best_margin >= margin_min
    return WitnessResult(found, hermitian_matrix(best_m), float(best_margin), checks)
