"""Dense density-matrix machinery for small qubit registers.

Everything here works on plain ``numpy`` arrays. A *density matrix* is a
2x2 or 4x4 complex Hermitian array with unit trace; ``check_density_matrix``
enforces that. A *Hermitian matrix* is any square Hermitian array (partial
transposes, spin-flipped states, pure-state projectors).

Qubit ordering follows the convention used throughout the package: qubits are
numbered from 1 and qubit 1 is the most significant bit of a basis index. The
two-qubit basis order is therefore ``|00>, |01>, |10>, |11>``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

__all__ = [
    "PureStateVector",
    "check_density_matrix",
    "check_hermitian",
    "partial_trace",
    "closed_form_rho2",
    "closed_form_rho1",
    "partial_transpose",
    "partial_transpose_qubit",
    "spin_flip",
    "hermitian_eigenvalues",
    "product_eigenvalues",
    "wootters_roots",
    "trace_norm",
]

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_WARN_TOL = 1e-10
PSD_ERROR_TOL = 1e-8
EIG_CLIP_TOL = 1e-10

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class PureStateVector:
    """Full computational-basis amplitude vector of an ``n_qubits`` register."""

    n_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if self.n_qubits < 1 or amps.shape[0] != 2**self.n_qubits:
            raise ValueError(f"expected {2**self.n_qubits} amplitudes for {self.n_qubits} qubits, got {amps.shape[0]}")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state vector is not normalized (norm={norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_amplitudes(cls, amps, normalize: bool = False) -> "PureStateVector":
        amps = np.asarray(amps, dtype=np.complex128).reshape(-1)
        n = int(round(np.log2(amps.shape[0])))
        if 2**n != amps.shape[0]:
            raise ValueError(f"length {amps.shape[0]} is not a power of two")
        if normalize:
            amps = amps / np.linalg.norm(amps)
        return cls(n, amps)

    def projector(self) -> np.ndarray:
        return np.outer(self.amps, self.amps.conj())


VectorLike = Union[PureStateVector, np.ndarray, Sequence[complex]]


def _as_pure_vector(psi: VectorLike) -> PureStateVector:
    if isinstance(psi, PureStateVector):
        return psi
    return PureStateVector.from_amplitudes(psi)


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``m`` as a complex square array, raising if it is not Hermitian."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.abs(m - m.conj().T).max() if m.size else 0.0
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (max |M - M^dag| = {dev:.3e})")
    return m


def check_density_matrix(rho, dims: Sequence[int] = (2, 4)) -> np.ndarray:
    """Validate a one- or two-qubit density matrix.

    Hermiticity and unit trace are hard requirements. Positivity is soft:
    eigenvalues slightly below zero (roundoff from partial traces) trigger a
    warning below ``-1e-10`` and an error only below ``-1e-8``.
    """
    rho = check_hermitian(rho)
    if rho.shape[0] not in dims:
        raise ValueError(f"density matrix dimension must be one of {tuple(dims)}, got {rho.shape[0]}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"density matrix trace is {tr!r}, expected 1")
    lo = np.linalg.eigvalsh(rho)[0]
    if lo < -PSD_ERROR_TOL:
        raise ValueError(f"density matrix is not positive semidefinite (min eigenvalue {lo:.3e})")
    if lo < -PSD_WARN_TOL:
        warnings.warn(f"density matrix has a negative eigenvalue {lo:.3e}", RuntimeWarning, stacklevel=2)
    return rho


def partial_trace(psi: VectorLike, keep: Sequence[int]) -> np.ndarray:
    """Reduced density matrix of the qubits in ``keep`` for a pure state.

    Parameters
    ----------
    psi : PureStateVector or array_like
        Normalized amplitude vector of length ``2**n``.
    keep : sequence of int
        One or two distinct 1-based qubit indices. The order given is the
        order of the tensor factors in the result, so ``keep=(2, 1)`` swaps
        the roles of the two qubits relative to ``keep=(1, 2)``.

    Returns
    -------
    numpy.ndarray
        ``2**len(keep)`` square density matrix.
    """
    psi = _as_pure_vector(psi)
    n = psi.n_qubits
    keep = [int(q) for q in keep]
    if not 1 <= len(keep) <= 2:
        raise ValueError("keep must name one or two qubits")
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate qubit indices in keep={keep}")
    for q in keep:
        if not 1 <= q <= n:
            raise ValueError(f"qubit index {q} out of range [1, {n}]")
    axes = [q - 1 for q in keep]
    rest = [a for a in range(n) if a not in axes]
    tensor = psi.amps.reshape((2,) * n).transpose(axes + rest)
    mat = tensor.reshape(2 ** len(keep), -1)
    rho = mat @ mat.conj().T
    return 0.5 * (rho + rho.conj().T)


def closed_form_rho2(n: int, theta: float) -> np.ndarray:
    """Two-qubit marginal of the one-parameter W-class state, in closed form."""
    if n < 3:
        raise ValueError(f"closed-form two-qubit marginal needs n >= 3, got {n}")
    c, s = np.cos(theta), np.sin(theta)
    off = np.sqrt(n) * s
    low = 1.0 - c
    m = np.array(
        [
            [2.0 * (n - 1 + c), off, off, 0.0],
            [off, low, low, 0.0],
            [off, low, low, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ],
        dtype=np.complex128,
    )
    return m / (2.0 * n)


def closed_form_rho1(n: int, theta: float) -> np.ndarray:
    """Single-qubit marginal of the one-parameter W-class state, in closed form."""
    if n < 2:
        raise ValueError(f"closed-form single-qubit marginal needs n >= 2, got {n}")
    c, s = np.cos(theta), np.sin(theta)
    off = np.sqrt(n) * s
    m = np.array([[2.0 * n - 1 + c, off], [off, 1.0 - c]], dtype=np.complex128)
    return m / (2.0 * n)


def partial_transpose_qubit(m, n_qubits: int, qubit: int) -> np.ndarray:
    """Transpose the indices of one qubit (1-based) of an ``n_qubits`` operator."""
    m = np.asarray(m, dtype=np.complex128)
    dim = 2**n_qubits
    if m.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got {m.shape}")
    if not 1 <= qubit <= n_qubits:
        raise ValueError(f"qubit index {qubit} out of range [1, {n_qubits}]")
    t = m.reshape((2,) * (2 * n_qubits))
    row_ax, col_ax = qubit - 1, n_qubits + qubit - 1
    return np.swapaxes(t, row_ax, col_ax).reshape(dim, dim)


def partial_transpose(rho) -> np.ndarray:
    """Partial transpose of a 4x4 operator on its second qubit."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_transpose expects a 4x4 matrix, got {rho.shape}")
    return partial_transpose_qubit(rho, 2, 2)


def spin_flip(rho) -> np.ndarray:
    """Wootters spin flip ``(Y x Y) rho* (Y x Y)`` of a 4x4 matrix."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"spin_flip expects a 4x4 matrix, got {rho.shape}")
    return SIGMA_YY @ rho.conj() @ SIGMA_YY


def hermitian_eigenvalues(m, tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted in descending order."""
    m = check_hermitian(m, tol)
    return np.linalg.eigvalsh(m)[::-1]


def product_eigenvalues(a, b, tol: float = EIG_CLIP_TOL) -> np.ndarray:
    """Eigenvalues of the product ``a @ b`` for two 4x4 matrices.

    Intended for ``b = spin_flip(a)``, where the spectrum is real and
    non-negative. Roundoff in ``[-tol, 0)`` is clipped to zero; an imaginary
    part or negative value beyond ``tol`` raises ``ValueError``.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != (4, 4) or b.shape != (4, 4):
        raise ValueError(f"product_eigenvalues expects two 4x4 matrices, got {a.shape} and {b.shape}")
    ev = np.linalg.eigvals(a @ b)
    if np.abs(ev.imag).max() > tol:
        raise ValueError(f"product has complex eigenvalues (max |imag| = {np.abs(ev.imag).max():.3e})")
    ev = ev.real
    if ev.min() < -tol:
        raise ValueError(f"product has a negative eigenvalue {ev.min():.3e}")
    ev = np.where(ev < 0.0, 0.0, ev)
    return np.sort(ev)[::-1]


def wootters_roots(rho, cutoff: float = 1e-13) -> np.ndarray:
    """Square roots of the eigenvalues of ``rho @ spin_flip(rho)``, descending.

    Computed as the singular values of ``Psi^T (Y x Y) Psi`` where the columns
    of ``Psi`` are the eigenvectors of ``rho`` scaled by the square roots of
    their eigenvalues. Unlike taking square roots of ``product_eigenvalues``,
    this keeps zero roots at machine precision for rank-deficient ``rho``;
    eigenvalues of ``rho`` below ``cutoff`` are treated as exact zeros.
    """
    rho = check_hermitian(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"wootters_roots expects a 4x4 matrix, got {rho.shape}")
    p, vecs = np.linalg.eigh(rho)
    if p[0] < -PSD_ERROR_TOL:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {p[0]:.3e})")
    keep = p > cutoff
    psi = vecs[:, keep] * np.sqrt(p[keep])
    roots = np.zeros(4)
    if psi.shape[1]:
        sv = np.linalg.svd(psi.T @ SIGMA_YY @ psi, compute_uv=False)
        roots[: sv.shape[0]] = sv
    return roots


def trace_norm(m) -> float:
    # Hermitian input: singular values are |eigenvalues|.
    return float(np.abs(hermitian_eigenvalues(m)).sum())
