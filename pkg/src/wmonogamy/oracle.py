"""Brute-force verification of the W-class closed forms.

The numeric side of every check is computed from raw ``2**N`` amplitude
vectors using only ``partial_trace``, ``partial_transpose``, the Wootters
spectrum and Hermitian eigensolves. Closed-form expressions appear solely as
the *reference* column, so a bug in a closed form cannot validate itself.

Outcomes serialize to JSON as::

    {"case": {...}, "checks": [{"check", "anchor", "numeric", "reference",
                                "deviation", "tolerance", "pass"}, ...],
     "passed": bool}
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .densmat import (
    PureStateVector,
    closed_form_rho1,
    closed_form_rho2,
    partial_trace,
    partial_transpose_qubit,
    trace_norm,
)
from .symstate import to_full_vector, wclass_state
from .tangle import (
    closed_form_one_vs_rest_concurrence,
    closed_form_pairwise_concurrence,
    concurrence_1_rest,
    concurrence_2q,
    negativity_2q,
    wstate_negativity_tangle_closed,
)

__all__ = [
    "Check",
    "VerificationCase",
    "VerificationOutcome",
    "default_theta_grid",
    "verify_marginals",
    "verify_concurrence_closed_forms",
    "verify_monogamy",
    "verify_monogamy_vectors",
    "verify_negativity_identity",
    "verify_wstate_curve",
    "direct_one_vs_rest_negativity",
    "run_suite",
    "suite_to_json",
]

MARGINAL_TOL = 1e-12
MONOGAMY_TOL = 1e-10
NEGATIVITY_IDENTITY_TOL = 1e-9
WSTATE_TOL = 1e-9

SPOT_THETAS = (math.pi / 3, math.pi / 2, math.pi, 3 * math.pi / 2)


def default_theta_grid(steps: int = 200, spot_checks: bool = True) -> List[float]:
    """``steps`` uniform points over ``(0, 2pi]`` plus a few exact angles."""
    grid = [2.0 * math.pi * k / steps for k in range(1, steps + 1)]
    if spot_checks:
        grid.extend(SPOT_THETAS)
    return grid


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    numeric: float
    reference: float
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "anchor": self.anchor,
            "numeric": float(self.numeric),
            "reference": float(self.reference),
            "deviation": float(self.deviation),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationCase:
    name: str
    n_qubits: Optional[Sequence[int]] = None
    thetas: Optional[Sequence[float]] = None
    description: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name}
        if self.n_qubits is not None:
            d["n_qubits"] = [int(n) for n in self.n_qubits]
        if self.thetas is not None:
            d["theta_count"] = len(self.thetas)
        if self.description:
            d["description"] = self.description
        return d


@dataclass
class VerificationOutcome:
    case: VerificationCase
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_deviation(self) -> float:
        return max((c.deviation for c in self.checks), default=0.0)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "case": self.case.to_dict(),
            "checks": [c.to_dict() for c in self.checks],
            "passed": self.passed,
        }


def _add(outcome: VerificationOutcome, name, anchor, numeric, reference, tol, deviation=None):
    if deviation is None:
        deviation = abs(numeric - reference)
    outcome.checks.append(Check(name, anchor, float(numeric), float(reference), float(deviation), tol))


def verify_marginals(n: int, theta: float) -> VerificationOutcome:
    """Partial-trace every pair and every single qubit; compare with closed forms."""
    if not 3 <= n <= 14:
        raise ValueError(f"verify_marginals supports 3 <= n <= 14, got {n}")
    psi = to_full_vector(wclass_state(n, theta))
    outcome = VerificationOutcome(VerificationCase("marginals", [n], [theta]))

    pairs = [partial_trace(psi, [i, j]) for i, j in combinations(range(1, n + 1), 2)]
    singles = [partial_trace(psi, [i]) for i in range(1, n + 1)]
    spread2 = max(np.abs(p - pairs[0]).max() for p in pairs)
    spread1 = max(np.abs(s - singles[0]).max() for s in singles)
    _add(outcome, f"pair-marginals-identical n={n}", "two-qubit-marginal-symmetry", spread2, 0.0, MARGINAL_TOL)
    _add(outcome, f"single-marginals-identical n={n}", "one-qubit-marginal-symmetry", spread1, 0.0, MARGINAL_TOL)

    dev2 = max(np.abs(p - closed_form_rho2(n, theta)).max() for p in pairs)
    dev1 = max(np.abs(s - closed_form_rho1(n, theta)).max() for s in singles)
    _add(outcome, f"rho2 closed form n={n}", "two-qubit-marginal", dev2, 0.0, MARGINAL_TOL)
    _add(outcome, f"rho1 closed form n={n}", "one-qubit-marginal", dev1, 0.0, MARGINAL_TOL)
    return outcome


def verify_concurrence_closed_forms(n: int, theta_grid: Optional[Iterable[float]] = None) -> VerificationOutcome:
    """Wootters and ``2 sqrt(det)`` concurrences against their closed forms.

    Also checks that the pairwise maximum over the grid is ``2/n`` at pi.
    """
    if not 3 <= n <= 14:
        raise ValueError(f"verify_concurrence_closed_forms supports 3 <= n <= 14, got {n}")
    thetas = list(default_theta_grid() if theta_grid is None else theta_grid)
    pair_dev = rest_dev = 0.0
    best_theta, best = None, -1.0
    for t in thetas:
        psi = to_full_vector(wclass_state(n, t))
        c2 = concurrence_2q(partial_trace(psi, [1, 2]))
        c1 = concurrence_1_rest(partial_trace(psi, [1]))
        pair_dev = max(pair_dev, abs(c2 - closed_form_pairwise_concurrence(n, t)))
        rest_dev = max(rest_dev, abs(c1 - closed_form_one_vs_rest_concurrence(n, t)))
        if c2 > best:
            best_theta, best = t, c2
    outcome = VerificationOutcome(VerificationCase("concurrence-closed-forms", [n], thetas))
    _add(outcome, f"pairwise concurrence n={n}", "pairwise-concurrence", pair_dev, 0.0, MONOGAMY_TOL)
    _add(outcome, f"one-vs-rest concurrence n={n}", "one-vs-rest-concurrence", rest_dev, 0.0, MONOGAMY_TOL)
    if math.pi in thetas:
        _add(outcome, f"pairwise maximum n={n}", "pairwise-concurrence-maximum", best, 2.0 / n, MONOGAMY_TOL)
        _add(outcome, f"pairwise argmax n={n}", "pairwise-concurrence-maximum", best_theta, math.pi, 1e-12)
    return outcome


def _monogamy_gap(psi: PureStateVector, focus: int = 1) -> float:
    n = psi.n_qubits
    pair_sq = sum(concurrence_2q(partial_trace(psi, [focus, k])) ** 2 for k in range(1, n + 1) if k != focus)
    det4 = 4.0 * float(np.real(np.linalg.det(partial_trace(psi, [focus]))))
    return abs(pair_sq - det4)


def verify_monogamy(n: int, theta_grid: Optional[Iterable[float]] = None) -> VerificationOutcome:
    """Sum of squared pairwise concurrences against ``4 det rho_1`` over a grid."""
    if not 3 <= n <= 12:
        raise ValueError(f"verify_monogamy supports 3 <= n <= 12, got {n}")
    thetas = list(default_theta_grid() if theta_grid is None else theta_grid)
    gaps = [_monogamy_gap(to_full_vector(wclass_state(n, t))) for t in thetas]
    outcome = VerificationOutcome(VerificationCase("monogamy", [n], thetas))
    _add(outcome, f"max monogamy gap n={n}", "monogamy-equality", max(gaps), 0.0, MONOGAMY_TOL)
    return outcome


def verify_monogamy_vectors(vectors: Sequence, label: str = "vectors") -> VerificationOutcome:
    """Monogamy equality for arbitrary (e.g. generalized W) state vectors, every focus qubit."""
    outcome = VerificationOutcome(VerificationCase(f"monogamy-{label}", description=f"{len(vectors)} raw vectors"))
    for idx, v in enumerate(vectors):
        psi = v if isinstance(v, PureStateVector) else PureStateVector.from_amplitudes(v)
        gap = max(_monogamy_gap(psi, f) for f in range(1, psi.n_qubits + 1))
        _add(outcome, f"monogamy gap {label}[{idx}]", "monogamy-equality", gap, 0.0, MONOGAMY_TOL)
    return outcome


def direct_one_vs_rest_negativity(psi: PureStateVector, focus: int = 1, transpose_rest: bool = False) -> float:
    """``||P^T||_1 - 1`` for the full projector ``P``, transposed on ``focus``.

    With ``transpose_rest`` every qubit except ``focus`` is transposed
    instead; the two choices are related by a full transpose and must agree.
    """
    n = psi.n_qubits
    m = psi.projector()
    targets = [q for q in range(1, n + 1) if q != focus] if transpose_rest else [focus]
    for q in targets:
        m = partial_transpose_qubit(m, n, q)
    return trace_norm(m) - 1.0


def verify_negativity_identity(n: int, theta_grid: Optional[Iterable[float]] = None) -> VerificationOutcome:
    """Direct 1:(N-1) negativity against ``2 sqrt(det rho_1)``."""
    if not 3 <= n <= 8:
        raise ValueError(f"verify_negativity_identity supports 3 <= n <= 8, got {n}")
    thetas = list(default_theta_grid() if theta_grid is None else theta_grid)
    worst = 0.0
    for t in thetas:
        psi = to_full_vector(wclass_state(n, t))
        direct = direct_one_vs_rest_negativity(psi)
        via_det = concurrence_1_rest(partial_trace(psi, [1]))
        worst = max(worst, abs(direct - via_det))
    outcome = VerificationOutcome(VerificationCase("negativity-identity", [n], thetas))
    _add(outcome, f"max |N_1:rest - 2 sqrt(det rho1)| n={n}", "one-vs-rest-negativity", worst, 0.0, NEGATIVITY_IDENTITY_TOL)
    return outcome


def _numeric_wstate_tangle(n: int) -> float:
    psi = to_full_vector(wclass_state(n, math.pi))
    one_rest_sq = 4.0 * float(np.real(np.linalg.det(partial_trace(psi, [1]))))
    pair_sq = sum(negativity_2q(partial_trace(psi, [1, k])) ** 2 for k in range(2, n + 1))
    return one_rest_sq - pair_sq


def verify_wstate_curve(n_range: Iterable[int]) -> VerificationOutcome:
    """W-state negativity tangle versus qubit number.

    Besides the pointwise comparison, checks that the maximum sits at n = 4
    (whenever 3, 4 and 5 are all in range) and that the curve strictly
    decreases from n = 4 on.
    """
    ns = sorted(set(int(n) for n in n_range))
    if not ns or ns[0] < 3 or ns[-1] > 14:
        raise ValueError(f"n_range must be a non-empty subset of [3, 14], got {ns}")
    outcome = VerificationOutcome(VerificationCase("wstate-negativity-tangle", ns, [math.pi]))
    values = {}
    for n in ns:
        values[n] = _numeric_wstate_tangle(n)
        _add(outcome, f"negativity tangle n={n}", "wstate-negativity-tangle", values[n], wstate_negativity_tangle_closed(n), WSTATE_TOL)
    if {3, 4, 5} <= set(ns):
        argmax = max(ns, key=lambda n: values[n])
        _add(outcome, "argmax over n", "wstate-negativity-tangle-maximum", argmax, 4, 0.0)
    tail = [n for n in ns if n >= 4]
    steps = [values[b] - values[a] for a, b in zip(tail, tail[1:]) if b == a + 1]
    if steps:
        rise = max(steps)
        # a flat step must fail too, hence the smallest positive float
        deviation = 0.0 if rise < 0 else max(rise, np.finfo(float).smallest_subnormal)
        _add(outcome, "max step for n >= 4", "wstate-negativity-tangle-decrease", rise, 0.0, 0.0, deviation=deviation)
    return outcome


def run_suite(max_n: int, theta_grid: Optional[Sequence[float]] = None) -> List[VerificationOutcome]:
    """All verification cases for ``n`` in ``[3, max_n]``.

    Each case family is capped at its own supported maximum (monogamy 12,
    negativity identity 8).
    """
    if not 3 <= max_n <= 14:
        raise ValueError(f"max_n must lie in [3, 14], got {max_n}")
    grid = list(default_theta_grid() if theta_grid is None else theta_grid)
    outcomes: List[VerificationOutcome] = []
    for n in range(3, max_n + 1):
        for t in SPOT_THETAS:
            outcomes.append(verify_marginals(n, t))
    for n in range(3, min(max_n, 12) + 1):
        outcomes.append(verify_concurrence_closed_forms(n, grid))
        outcomes.append(verify_monogamy(n, grid))
    for n in range(3, min(max_n, 8) + 1):
        outcomes.append(verify_negativity_identity(n, grid))
    outcomes.append(verify_wstate_curve(range(3, max_n + 1)))
    return outcomes


def suite_to_json(outcomes: Sequence[VerificationOutcome], max_n: Optional[int] = None) -> str:
    payload = {
        "max_n": max_n,
        "passed": all(o.passed for o in outcomes),
        "outcomes": [o.to_dict() for o in outcomes],
    }
    return json.dumps(payload, indent=2) + "\n"
