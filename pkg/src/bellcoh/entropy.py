"""Entropy primitives, all in bits.

Eigenvalues of the small (2x2, 4x4) Hermitian matrices that show up here
come from a cyclic complex Jacobi solver, :func:`jacobi_eigh`.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    DomainError,
    InfiniteDivergence,
    InvalidDensityMatrix,
    InvalidDistribution,
    NoConvergence,
)

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 50
EIG_CLAMP = 1e-10
SUPPORT_TOL = 1e-12


def xlog2x(x):
    """Elementwise ``x log2 x`` with ``0 log 0 = 0``."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0, x, 1.0)
    return np.where(x > 0, x * np.log2(safe), 0.0)


def shannon_entropy(p) -> float:
    """Shannon entropy ``-sum p log2 p`` of a probability vector."""
    p = np.asarray(p, dtype=float).ravel()
    if p.size and p.min() < -1e-12:
        raise InvalidDistribution(f"negative probability {p.min():.3e}")
    if abs(p.sum() - 1) > 1e-8:
        raise InvalidDistribution(f"probabilities sum to {p.sum():.12g}")
    p = np.clip(p, 0.0, None)
    return float(-xlog2x(p).sum())


def binary_entropy(x):
    """``H(x, 1-x)``; vectorised, no validation."""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    return -(xlog2x(x) + xlog2x(1 - x))


def qubit_entropy_from_bloch(r):
    """Entropy of a qubit state with Bloch vector length ``r`` (vectorised)."""
    r = np.clip(np.asarray(r, dtype=float), 0.0, 1.0)
    return binary_entropy((1 + r) / 2)


def jacobi_eigh(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a small Hermitian matrix by cyclic Jacobi sweeps.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the usual real Jacobi rotation.

    Returns
    -------
    w : ndarray, shape (n,)
        Eigenvalues in ascending order.
    v : ndarray, shape (n, n)
        Unitary matrix whose columns are the matching eigenvectors.

    Raises
    ------
    NoConvergence
        If the off-diagonal norm is still above ``tol`` after ``max_sweeps``.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    a = (a + a.conj().T) / 2
    v = np.eye(n, dtype=complex)

    mask = ~np.eye(n, dtype=bool)

    def off(x):
        return np.sqrt(np.sum(np.abs(x[mask]) ** 2))

    for _ in range(max_sweeps + 1):
        if off(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                b = abs(apq)
                if b < 1e-300:
                    continue
                phase = apq / b
                theta = (a[q, q].real - a[p, p].real) / (2 * b)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1))
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                j = np.eye(n, dtype=complex)
                j[p, p] = c
                j[p, q] = s
                j[q, p] = -s * np.conj(phase)
                j[q, q] = c * np.conj(phase)
                a = j.conj().T @ a @ j
                a[p, q] = a[q, p] = 0
                v = v @ j
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _spectrum(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape not in ((2, 2), (4, 4)):
        raise DomainError(f"only 2x2 and 4x4 matrices are supported, got {m.shape}")
    if np.abs(m - m.conj().T).max() > 1e-10:
        raise InvalidDensityMatrix("matrix is not Hermitian")
    if abs(np.trace(m) - 1) > 1e-8:
        raise InvalidDensityMatrix(f"trace {np.trace(m).real:.12g} != 1")
    w, _ = jacobi_eigh(m)
    if w.min() < -EIG_CLAMP:
        raise InvalidDensityMatrix(f"negative eigenvalue {w.min():.3e}")
    return np.clip(w, 0.0, None)


def eigenvalues(m) -> np.ndarray:
    """Clamped Jacobi spectrum of a density matrix, ascending."""
    return _spectrum(m)


def von_neumann_entropy(m) -> float:
    """``S(m) = -Tr m log2 m`` for a 2x2 or 4x4 density matrix."""
    w = _spectrum(m)
    return shannon_entropy(w / w.sum())


def relative_entropy(rho, delta) -> float:
    """Quantum relative entropy ``Tr[rho (log2 rho - log2 delta)]``.

    Raises
    ------
    InfiniteDivergence
        When ``rho`` has weight outside the support of ``delta``.
    """
    rho = np.asarray(rho, dtype=complex)
    delta = np.asarray(delta, dtype=complex)
    _spectrum(rho)
    _spectrum(delta)
    mu, u = jacobi_eigh(delta)
    weights = np.einsum("ik,ij,jk->k", u.conj(), rho, u).real
    outside = (mu <= SUPPORT_TOL) & (weights > SUPPORT_TOL)
    if outside.any():
        raise InfiniteDivergence("support of rho is not contained in support of delta")
    inside = mu > SUPPORT_TOL
    cross = float(np.sum(weights[inside] * np.log2(mu[inside])))
    return -von_neumann_entropy(rho) - cross


def cc_kernel(c) -> float:
    """Classical correlation of a Bell-diagonal state with ``c = max|c_k|``.

    ``(1-c)/2 log2(1-c) + (1+c)/2 log2(1+c)``, increasing from 0 at ``c=0``
    to 1 at ``c=1``.
    """
    c = float(c)
    if c < -1e-12 or c > 1 + 1e-12:
        raise DomainError(f"cc_kernel needs 0 <= c <= 1, got {c!r}")
    c = min(max(c, 0.0), 1.0)
    return float((xlog2x(1 - c) + xlog2x(1 + c)) / 2)
