"""Symmetric N-qubit pure states in the Dicke basis.

States are built either from Majorana spinors (a symmetrized product of N
single-qubit states) or directly from the two-spinor family

    |Psi_{N-k,k}> = sum_{r<=k} sqrt(C(N,r)) alpha_r |N/2, N/2 - r>,
    alpha_r ~ (N-r)! / ((N-k)! (k-r)!) d0^(k-r) d1^r,

whose k = 1 member reduces, up to local unitaries, to the one-parameter
W-class state ``cos(theta/2)|0...0> + sin(theta/2)|W_N>``.

Dicke coefficients are stored as physical amplitudes: entry ``r`` multiplies
the *normalized* Dicke state with ``r`` excitations, so the coefficient
vector has unit Euclidean norm.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence

import numpy as np

from .densmat import PureStateVector

__all__ = [
    "Spinor",
    "SymmetricState",
    "WClassParams",
    "DegeneracyConfig",
    "make_spinor",
    "majorana_state",
    "dicke_state",
    "dnk_state",
    "wclass_state",
    "canonicalize_ab",
    "to_full_vector",
    "enumerate_slocc_configs",
    "partition_count",
    "MAX_FULL_VECTOR_QUBITS",
]

NORM_TOL = 1e-12
SEPARABLE_TOL = 1e-12
MAX_FULL_VECTOR_QUBITS = 20


@dataclass(frozen=True)
class Spinor:
    """Single-qubit state ``c0|0> + c1|1>``."""

    c0: complex
    c1: complex

    def __post_init__(self):
        norm2 = abs(self.c0) ** 2 + abs(self.c1) ** 2
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"spinor is not normalized (|c0|^2 + |c1|^2 = {norm2!r})")
        object.__setattr__(self, "c0", complex(self.c0))
        object.__setattr__(self, "c1", complex(self.c1))

    def as_array(self) -> np.ndarray:
        return np.array([self.c0, self.c1], dtype=np.complex128)


@dataclass(frozen=True)
class SymmetricState:
    """Permutation-invariant pure state stored by its Dicke coefficients.

    ``dicke_coeffs[r]`` is the amplitude of the normalized Dicke state with
    ``r`` qubits in ``|1>``. ``separable`` is set by the constructors when the
    state is a product state (outside the W-class).
    """

    n_qubits: int
    dicke_coeffs: np.ndarray
    separable: bool = False

    def __post_init__(self):
        if self.n_qubits < 2:
            raise ValueError(f"symmetric states need at least 2 qubits, got {self.n_qubits}")
        coeffs = np.array(self.dicke_coeffs, dtype=np.complex128).reshape(-1)
        if coeffs.shape[0] != self.n_qubits + 1:
            raise ValueError(f"expected {self.n_qubits + 1} Dicke coefficients, got {coeffs.shape[0]}")
        norm = np.linalg.norm(coeffs)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"Dicke coefficients are not normalized (norm={norm!r})")
        coeffs.setflags(write=False)
        object.__setattr__(self, "dicke_coeffs", coeffs)

    def alpha(self) -> np.ndarray:
        """Bare coefficients ``alpha_r``, i.e. ``dicke_coeffs[r] / sqrt(C(N, r))``."""
        binom = np.array([math.comb(self.n_qubits, r) for r in range(self.n_qubits + 1)], dtype=float)
        return self.dicke_coeffs / np.sqrt(binom)


@dataclass(frozen=True)
class WClassParams:
    n_qubits: int
    theta: float

    def __post_init__(self):
        if self.n_qubits < 2:
            raise ValueError(f"n_qubits must be >= 2, got {self.n_qubits}")
        if not 0.0 < self.theta <= 2.0 * math.pi:
            raise ValueError(f"theta must lie in (0, 2pi], got {self.theta!r}")


@dataclass(frozen=True, order=True)
class DegeneracyConfig:
    """Multiplicities of the distinct Majorana spinors, e.g. ``D_{2,1}``."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or min(parts) < 1:
            raise ValueError(f"parts must be positive integers, got {self.parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"parts must be non-increasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n_qubits(self) -> int:
        return sum(self.parts)

    @property
    def n_distinct(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "D_{" + ",".join(str(p) for p in self.parts) + "}"


def make_spinor(alpha: float, beta: float) -> Spinor:
    """Bloch-sphere spinor ``cos(b/2) e^{-ia/2}|0> + sin(b/2) e^{ia/2}|1>``."""
    return Spinor(
        math.cos(beta / 2.0) * cmath.exp(-0.5j * alpha),
        math.sin(beta / 2.0) * cmath.exp(0.5j * alpha),
    )


def _fix_global_phase(coeffs: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(coeffs) > 1e-15)
    if nz.size == 0:
        return coeffs
    # exp(-i*0) is exactly 1, so already-real coefficients pass through untouched
    return coeffs * np.exp(-1j * np.angle(coeffs[nz[0]]))


def _symmetric_from_unnormalized(n: int, coeffs: np.ndarray, separable: bool = False) -> SymmetricState:
    # phase first, then a plain sum-of-squares norm and componentwise real
    # division: a lone real entry x then normalizes to exactly 1.0
    coeffs = _fix_global_phase(coeffs)
    norm = math.sqrt(float(np.sum(np.abs(coeffs) ** 2)))
    if norm == 0.0:
        raise ValueError("state vanishes identically")
    unit = coeffs.real / norm + 1j * (coeffs.imag / norm)
    return SymmetricState(n, unit, separable=separable)


def majorana_state(spinors: Sequence[Spinor]) -> SymmetricState:
    """Normalized symmetrization of the product of ``spinors``.

    The amplitude on any basis string with ``r`` ones is the average of
    ``prod c1 * prod c0`` over the ways of assigning ``r`` of the spinors to
    the excited positions, i.e. ``e_r / C(N, r)`` where ``e_r`` is the
    coefficient of ``x**r`` in ``prod_l (c0_l + c1_l x)``.
    """
    spinors = list(spinors)
    n = len(spinors)
    if n < 2:
        raise ValueError("need at least two spinors")
    poly = np.array([1.0 + 0j])
    for sp in spinors:
        poly = np.convolve(poly, [sp.c0, sp.c1])
    binom = np.array([math.comb(n, r) for r in range(n + 1)], dtype=float)
    coeffs = poly / np.sqrt(binom)
    distinct = _count_distinct(spinors)
    return _symmetric_from_unnormalized(n, coeffs, separable=(distinct == 1))


def _count_distinct(spinors: Sequence[Spinor], tol: float = 1e-10) -> int:
    reps: List[np.ndarray] = []
    for sp in spinors:
        v = sp.as_array()
        if not any(abs(abs(np.vdot(r, v)) - 1.0) < tol for r in reps):
            reps.append(v)
    return len(reps)


def dicke_state(n: int, r: int) -> SymmetricState:
    if not 0 <= r <= n:
        raise ValueError(f"excitation number {r} out of range [0, {n}]")
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[r] = 1.0
    return SymmetricState(n, coeffs, separable=(r in (0, n)))


def dnk_state(n: int, k: int, d0: complex, d1: complex) -> SymmetricState:
    """Two-spinor state of class ``D_{n-k,k}`` in its reduced form.

    ``(d0, d1)`` is the second spinor after rotating the first onto ``|0>``.
    The normalization is fixed numerically and the global phase is chosen so
    that the first non-zero coefficient is real and non-negative.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= k <= n // 2:
        raise ValueError(f"k must lie in [1, {n // 2}] for n={n}, got {k}")
    d0, d1 = complex(d0), complex(d1)
    if abs(abs(d0) ** 2 + abs(d1) ** 2 - 1.0) > NORM_TOL:
        raise ValueError("(d0, d1) must be a normalized spinor")
    if d1 == 0:
        raise ValueError("d1 = 0 collapses the state to the separable class D_N")
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    for r in range(k + 1):
        alpha = math.factorial(n - r) / (math.factorial(n - k) * math.factorial(k - r)) * d0 ** (k - r) * d1**r
        coeffs[r] = math.sqrt(math.comb(n, r)) * alpha
    return _symmetric_from_unnormalized(n, coeffs)


def wclass_state(n: int, theta: float) -> SymmetricState:
    """``cos(theta/2)|0...0> + sin(theta/2)|W_n>``.

    ``theta`` may range over ``[0, 2pi]``; the endpoints give product states,
    which are accepted but flagged ``separable``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0.0 <= theta <= 2.0 * math.pi:
        raise ValueError(f"theta must lie in [0, 2pi], got {theta!r}")
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = math.cos(theta / 2.0)
    coeffs[1] = math.sin(theta / 2.0)
    return SymmetricState(n, coeffs, separable=abs(coeffs[1]) < SEPARABLE_TOL)


def canonicalize_ab(a: complex, b: complex) -> float:
    """Angle ``theta`` in ``[0, pi]`` of ``a|0..0> + b|W>`` after phase removal."""
    if abs(abs(a) ** 2 + abs(b) ** 2 - 1.0) > NORM_TOL:
        raise ValueError("|a|^2 + |b|^2 must equal 1")
    return 2.0 * math.atan2(abs(b), abs(a))


def to_full_vector(state: SymmetricState, max_qubits: int = MAX_FULL_VECTOR_QUBITS) -> PureStateVector:
    """Expand a symmetric state into its ``2**N`` computational amplitudes.

    Qubit 1 is the most significant bit of the basis index.
    """
    n = state.n_qubits
    if n > max_qubits:
        raise ValueError(f"{n} qubits exceeds the full-vector cap of {max_qubits}")
    weights = np.bitwise_count(np.arange(2**n, dtype=np.uint64)).astype(np.intp)
    binom = np.array([math.comb(n, r) for r in range(n + 1)], dtype=float)
    per_weight = state.dicke_coeffs / np.sqrt(binom)
    return PureStateVector(n, per_weight[weights])


def _partitions_exact(n: int, r: int, largest: int) -> Iterator[tuple]:
    # partitions of n into exactly r parts, each <= largest, descending lex order
    if r == 0:
        if n == 0:
            yield ()
        return
    hi = min(largest, n - (r - 1))
    lo = -(-n // r)
    for first in range(hi, lo - 1, -1):
        for rest in _partitions_exact(n - first, r - 1, first):
            yield (first,) + rest


def enumerate_slocc_configs(n: int, r: int) -> List[DegeneracyConfig]:
    """All degeneracy configurations of ``n`` qubits with ``r`` distinct spinors."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in [1, {n}], got {r}")
    return [DegeneracyConfig(p) for p in _partitions_exact(n, r, n)]


def partition_count(n: int, r: int) -> int:
    """Number of partitions of ``n`` into exactly ``r`` positive parts."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    table = [[0] * (r + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for j in range(1, min(m, r) + 1):
            table[m][j] = table[m - 1][j - 1] + table[m - j][j]
    return table[n][r]

