"""Bipartite entanglement measures and the two monogamy tangles.

Every quantity has a generic numerical route (full state vector, partial
trace, spectra) and, for the one-parameter W-class family, a closed form.
Negativity uses the doubled convention ``||rho^T||_1 - 1`` so that, like the
concurrence, it ranges over ``[0, 1]`` for two qubits.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, Union

import numpy as np

from .densmat import (
    PureStateVector,
    check_density_matrix,
    partial_trace,
    partial_transpose,
    trace_norm,
    wootters_roots,
)
from .symstate import SymmetricState, to_full_vector, wclass_state

__all__ = [
    "MeasureKind",
    "MeasureSet",
    "TangleReport",
    "concurrence_2q",
    "concurrence_1_rest",
    "negativity_2q",
    "negativity_1_rest",
    "concurrence_tangle",
    "negativity_tangle",
    "negativity_tangle_focus",
    "wstate_negativity_tangle_closed",
    "closed_form_pairwise_concurrence",
    "closed_form_one_vs_rest_concurrence",
    "tangle_report",
]

StateLike = Union[SymmetricState, PureStateVector, np.ndarray]


class MeasureKind(str, Enum):
    CONCURRENCE = "concurrence"
    NEGATIVITY = "negativity"


@dataclass(frozen=True)
class MeasureSet:
    """Pairwise and focus-vs-rest values of one entanglement measure."""

    pairwise: float
    one_vs_rest: float
    measure_kind: MeasureKind

    def __post_init__(self):
        for name in ("pairwise", "one_vs_rest"):
            v = getattr(self, name)
            if not -1e-12 <= v <= 1.0 + 1e-12:
                raise ValueError(f"{name}={v!r} outside [0, 1]")

    def tangle(self, n_qubits: int) -> float:
        return self.one_vs_rest**2 - (n_qubits - 1) * self.pairwise**2


@dataclass(frozen=True)
class TangleReport:
    n_qubits: int
    theta: float
    concurrence_set: MeasureSet
    negativity_set: MeasureSet
    concurrence_tangle: float
    negativity_tangle: float
    closed_form_residuals: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("concurrence_set", "negativity_set"):
            d[key]["measure_kind"] = d[key]["measure_kind"].value
        return d


def _as_vector(state: StateLike) -> PureStateVector:
    if isinstance(state, SymmetricState):
        return to_full_vector(state)
    if isinstance(state, PureStateVector):
        return state
    return PureStateVector.from_amplitudes(state)


def concurrence_2q(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    ``max(0, s1 - s2 - s3 - s4)`` where ``s_i`` are the square roots, in
    decreasing order, of the eigenvalues of ``rho @ spin_flip(rho)``
    (obtained directly as singular values, see ``wootters_roots``).
    """
    rho = check_density_matrix(rho, dims=(4,))
    roots = wootters_roots(rho)
    return float(max(0.0, roots[0] - roots[1:].sum()))


def concurrence_1_rest(rho1) -> float:
    """Concurrence between one qubit and the rest of a pure state, ``2 sqrt(det rho1)``."""
    rho1 = check_density_matrix(rho1, dims=(2,))
    det = float(np.real(np.linalg.det(rho1)))
    return 2.0 * math.sqrt(max(0.0, det))


def negativity_2q(rho) -> float:
    rho = check_density_matrix(rho, dims=(4,))
    return max(0.0, trace_norm(partial_transpose(rho)) - 1.0)


def negativity_1_rest(rho1) -> float:
    """Negativity between one qubit and the rest of a pure state.

    For pure global states this coincides with the one-vs-rest concurrence;
    the oracle module checks the identity against a direct partial transpose
    of the full projector.
    """
    return concurrence_1_rest(rho1)


def concurrence_tangle(state: StateLike, focus: int = 1) -> float:
    """Squared focus-vs-rest concurrence minus all squared pairwise concurrences.

    Every pair ``(focus, k)`` is traced out and evaluated separately, so
    non-symmetric inputs go through the same code as symmetric ones.
    """
    psi = _as_vector(state)
    n = psi.n_qubits
    if n < 3:
        raise ValueError(f"concurrence tangle needs n >= 3, got {n}")
    if not 1 <= focus <= n:
        raise ValueError(f"focus qubit {focus} out of range [1, {n}]")
    one_rest = concurrence_1_rest(partial_trace(psi, [focus]))
    pair_sq = sum(concurrence_2q(partial_trace(psi, [focus, k])) ** 2 for k in range(1, n + 1) if k != focus)
    return one_rest**2 - pair_sq


def negativity_tangle_focus(state: StateLike, focus: int = 1) -> float:
    psi = _as_vector(state)
    n = psi.n_qubits
    if n < 3:
        raise ValueError(f"negativity tangle needs n >= 3, got {n}")
    if not 1 <= focus <= n:
        raise ValueError(f"focus qubit {focus} out of range [1, {n}]")
    one_rest = negativity_1_rest(partial_trace(psi, [focus]))
    pair_sq = sum(negativity_2q(partial_trace(psi, [focus, k])) ** 2 for k in range(1, n + 1) if k != focus)
    return one_rest**2 - pair_sq


def negativity_tangle(state: StateLike) -> float:
    """Negativity tangle, the focus-averaged residual of squared negativities.

    For a ``SymmetricState`` all focus choices coincide, so only qubit 1 is
    evaluated, using one representative pair:
    ``4 det rho_1 - (N - 1) N_12**2``. Raw vectors are averaged over every
    focus qubit.
    """
    if isinstance(state, SymmetricState):
        psi = to_full_vector(state)
        n = psi.n_qubits
        if n < 3:
            raise ValueError(f"negativity tangle needs n >= 3, got {n}")
        one_rest = negativity_1_rest(partial_trace(psi, [1]))
        pair = negativity_2q(partial_trace(psi, [1, 2]))
        return one_rest**2 - (n - 1) * pair**2
    psi = _as_vector(state)
    return float(np.mean([negativity_tangle_focus(psi, f) for f in range(1, psi.n_qubits + 1)]))


def wstate_negativity_tangle_closed(n: int) -> float:
    """Negativity tangle of the n-qubit W state, in closed form."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    m = n - 2
    gap = math.sqrt(m * m + 4.0) - m
    return (n - 1) / n**2 * (4.0 - gap * gap)


def closed_form_pairwise_concurrence(n: int, theta: float) -> float:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return (1.0 - math.cos(theta)) / n


def closed_form_one_vs_rest_concurrence(n: int, theta: float) -> float:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return math.sqrt(n - 1) / n * (1.0 - math.cos(theta))


def tangle_report(n: int, theta: float) -> TangleReport:
    """All measures and both tangles of ``wclass_state(n, theta)``.

    Numbers come from the generic pipeline on the full vector; the residual
    map records their absolute deviation from the closed forms. The W-state
    negativity-tangle residual is only present when ``theta`` equals pi.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    psi = to_full_vector(wclass_state(n, theta))
    rho1 = partial_trace(psi, [1])
    rho2 = partial_trace(psi, [1, 2])
    conc = MeasureSet(concurrence_2q(rho2), concurrence_1_rest(rho1), MeasureKind.CONCURRENCE)
    neg = MeasureSet(negativity_2q(rho2), negativity_1_rest(rho1), MeasureKind.NEGATIVITY)
    c_tangle = concurrence_tangle(psi, focus=1)
    n_tangle = neg.tangle(n)

    pair_sq_sum = (n - 1) * conc.pairwise**2
    det_term = 4.0 * float(np.real(np.linalg.det(rho1)))
    residuals = {
        "pairwise_concurrence": abs(conc.pairwise - closed_form_pairwise_concurrence(n, theta)),
        "one_vs_rest_concurrence": abs(conc.one_vs_rest - closed_form_one_vs_rest_concurrence(n, theta)),
        "monogamy_gap": abs(pair_sq_sum - det_term),
    }
    if theta == math.pi:
        residuals["wstate_negativity_tangle"] = abs(n_tangle - wstate_negativity_tangle_closed(n))
    return TangleReport(n, float(theta), conc, neg, c_tangle, n_tangle, residuals)
