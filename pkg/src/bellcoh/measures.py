"""Correlation and coherence measures.

Closed forms for Bell-diagonal states take a :class:`BellDiagonalParams`;
the ``*_matrix`` variants work on explicit density matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .entropy import cc_kernel, shannon_entropy, von_neumann_entropy, xlog2x
from .errors import InvalidBasis
from .qstate import PauliAxis, as_params, bell_eigenvalues, require_physical

BOUNDARY_TOL = 1e-9


def _spectral_entropy(p) -> float:
    lam = np.clip(bell_eigenvalues(p), 0.0, None)
    return shannon_entropy(lam / lam.sum())


def _diagonal_entropy(c: float) -> float:
    # entropy of the dephased state: diagonal ((1+c)/4, (1-c)/4, (1-c)/4, (1+c)/4)
    c = min(abs(c), 1.0)
    return float(-2 * (xlog2x((1 + c) / 4) + xlog2x((1 - c) / 4)))


def mutual_information(p) -> float:
    """``sum_ab λ_ab log2(4 λ_ab)``, i.e. ``2 - H(λ)``."""
    p = require_physical(p)
    return 2.0 - _spectral_entropy(p)


def classical_correlation(p) -> float:
    p = require_physical(p)
    return cc_kernel(p.abs_max())


def quantum_discord(p) -> float:
    """Discord of a Bell-diagonal state.

    One-sided, two-sided and relative-entropy discord all coincide on this
    family, so a single closed form serves all three.
    """
    p = require_physical(p)
    return _diagonal_entropy(p.abs_max()) - _spectral_entropy(p)


def coherence_rel(p, axis=PauliAxis.AXIS3) -> float:
    """Relative entropy of coherence in the σ_axis representation."""
    p = require_physical(p)
    return _diagonal_entropy(p.coefficient(axis)) - _spectral_entropy(p)


def coherence_l1(p, axis=PauliAxis.AXIS3) -> float:
    """l1 coherence in the σ_axis representation.

    ``|c_u - c_v|/2 + |c_u + c_v|/2 = max(|c_u|, |c_v|)`` where u, v are the
    two other axes.
    """
    p = require_physical(p)
    u, v = (p[i] for i in range(3) if i != int(axis) - 1)
    return abs(u - v) / 2 + abs(u + v) / 2


def _check_basis(basis, dim: int) -> np.ndarray:
    if basis is None:
        return np.eye(dim, dtype=complex)
    if isinstance(basis, (tuple, list)) and len(basis) == 2 and np.ndim(basis[0]) == 2:
        basis = np.kron(np.asarray(basis[0]), np.asarray(basis[1]))
    u = np.asarray(basis, dtype=complex)
    if u.shape != (dim, dim):
        raise InvalidBasis(f"basis has shape {u.shape}, expected {(dim, dim)}")
    dev = np.abs(u.conj().T @ u - np.eye(dim)).max()
    if dev > 1e-10:
        raise InvalidBasis(f"basis vectors not orthonormal (deviation {dev:.3e})")
    return u


def coherence_rel_matrix(m, basis=None) -> float:
    """``S(dephased m) - S(m)`` with dephasing in ``basis``.

    Parameters
    ----------
    m : array_like, shape (d, d)
        Density matrix, d = 2 or 4.
    basis : array_like or pair of arrays, optional
        Unitary whose columns are the basis vectors, or a pair ``(uA, uB)``
        of single-qubit unitaries forming a product basis.  Defaults to the
        computational basis.
    """
    m = np.asarray(m, dtype=complex)
    u = _check_basis(basis, m.shape[0])
    probs = np.einsum("ik,ij,jk->k", u.conj(), m, u).real
    probs = np.clip(probs, 0.0, None)
    return shannon_entropy(probs / probs.sum()) - von_neumann_entropy(m)


def coherence_l1_matrix(m) -> float:
    """Sum of moduli of off-diagonal entries in the computational basis."""
    m = np.asarray(m, dtype=complex)
    return float(np.abs(m).sum() - np.abs(np.diag(m)).sum())


def optimal_axis(p) -> PauliAxis:
    """Axis carrying the largest ``|c_k|``; exact ties go to the lowest axis."""
    p = require_physical(p)
    mags = [abs(c) for c in p]
    return PauliAxis(mags.index(max(mags)) + 1)


class Region(NamedTuple):
    axis: PauliAxis
    boundary: bool

    @property
    def label(self) -> str:
        return "BOUNDARY" if self.boundary else f"C{int(self.axis)}"


def classify_region(p) -> Region:
    """Tetrahedron region (which |c_k| is largest) plus sudden-change flag."""
    p = require_physical(p)
    top, second = sorted((abs(c) for c in p), reverse=True)[:2]
    return Region(optimal_axis(p), top - second < BOUNDARY_TOL)


@dataclass(frozen=True)
class MeasureSet:
    mutual_information: float
    classical_correlation: float
    discord: float
    coherence_rel: tuple
    coherence_l1: tuple
    optimal_axis: PauliAxis
    region: str

    def as_dict(self) -> dict:
        d = {
            "mutual_info": self.mutual_information,
            "classical_corr": self.classical_correlation,
            "discord": self.discord,
        }
        for k in range(3):
            d[f"coherence_rel_{k + 1}"] = self.coherence_rel[k]
        for k in range(3):
            d[f"coherence_l1_{k + 1}"] = self.coherence_l1[k]
        d["optimal_axis"] = int(self.optimal_axis)
        d["region"] = self.region
        return d


def measure_set(p) -> MeasureSet:
    """Every Bell-diagonal measure at once."""
    p = require_physical(as_params(p))
    h = _spectral_entropy(p)
    c = p.abs_max()
    mags = [abs(x) for x in p]
    axis = PauliAxis(mags.index(c) + 1)
    top, second = sorted(mags, reverse=True)[:2]
    return MeasureSet(
        mutual_information=2.0 - h,
        classical_correlation=cc_kernel(c),
        discord=_diagonal_entropy(c) - h,
        coherence_rel=tuple(_diagonal_entropy(x) - h for x in p),
        coherence_l1=tuple(
            abs(p[u] - p[v]) / 2 + abs(p[u] + p[v]) / 2 for u, v in ((1, 2), (0, 2), (0, 1))
        ),
        optimal_axis=axis,
        region=Region(axis, top - second < BOUNDARY_TOL).label,
    )
