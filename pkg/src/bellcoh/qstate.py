"""Bell-diagonal two-qubit states.

A Bell-diagonal state is fixed by three correlation coefficients

    rho = (I⊗I + c1 σ1⊗σ1 + c2 σ2⊗σ2 + c3 σ3⊗σ3) / 4

and has maximally mixed marginals.  The same state can be written in the
eigenbasis of any of the three Pauli operators; :class:`PauliAxis` names
which representation a basis-dependent quantity refers to.

Eigenvalues are always enumerated in the order (a, b) = 00, 01, 10, 11.
"""
from __future__ import annotations

import enum
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import InvalidDensityMatrix, NonPhysicalState, NotBellDiagonal

PHYSICAL_TOL = 1e-12
BELL_DIAGONAL_TOL = 1e-10

IDENTITY = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA1, SIGMA2, SIGMA3)


class PauliAxis(enum.IntEnum):
    """Representation axis; integer order doubles as the tie-break order."""

    AXIS1 = 1
    AXIS2 = 2
    AXIS3 = 3

    @property
    def pauli(self) -> np.ndarray:
        return PAULIS[self - 1]


class BellDiagonalParams(NamedTuple):
    c1: float
    c2: float
    c3: float

    def abs_max(self) -> float:
        return max(abs(self.c1), abs(self.c2), abs(self.c3))

    def coefficient(self, axis) -> float:
        return self[int(axis) - 1]


def as_params(p) -> BellDiagonalParams:
    if isinstance(p, BellDiagonalParams):
        return p
    c1, c2, c3 = (float(x) for x in p)
    return BellDiagonalParams(c1, c2, c3)


def bell_eigenvalues(p) -> np.ndarray:
    """Eigenvalues ``(λ00, λ01, λ10, λ11)`` of the Bell-diagonal state.

    No physicality check is made; unphysical tuples give negative entries.
    """
    c1, c2, c3 = as_params(p)
    out = np.empty(4)
    for i, (a, b) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
        out[i] = (1 + (-1) ** a * c1 - (-1) ** (a + b) * c2 + (-1) ** b * c3) / 4
    return out


def is_physical(p, tol: float = PHYSICAL_TOL) -> bool:
    return bool(bell_eigenvalues(p).min() >= -tol)


def require_physical(p) -> BellDiagonalParams:
    p = as_params(p)
    if not is_physical(p):
        lam = bell_eigenvalues(p)
        raise NonPhysicalState(
            f"state outside tetrahedron: {tuple(p)} has eigenvalue {lam.min():.6g}"
        )
    return p


# (diagonal coefficient, first off-diagonal, second off-diagonal) per axis.
# Corner entries are (u - v)/4, middle anti-diagonal entries (u + v)/4.
_AXIS_LAYOUT = {
    PauliAxis.AXIS1: (0, 2, 1),
    PauliAxis.AXIS2: (1, 2, 0),
    PauliAxis.AXIS3: (2, 0, 1),
}


def _axis_matrix(p: BellDiagonalParams, axis: PauliAxis) -> np.ndarray:
    k, u, v = _AXIS_LAYOUT[PauliAxis(axis)]
    d, cu, cv = p[k], p[u], p[v]
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = 1 + d
    m[1, 1] = m[2, 2] = 1 - d
    m[0, 3] = m[3, 0] = cu - cv
    m[1, 2] = m[2, 1] = cu + cv
    return m / 4


def to_density_matrix(p, axis=PauliAxis.AXIS3) -> np.ndarray:
    """Explicit 4x4 matrix of a Bell-diagonal state in the given representation.

    ``AXIS3`` is the computational basis.  ``AXIS1``/``AXIS2`` are the same
    state written in the σ1/σ2 eigenbases, which amounts to permuting the
    roles of the coefficients.
    """
    return _axis_matrix(require_physical(p), PauliAxis(axis))


class BellProjection(NamedTuple):
    params: BellDiagonalParams
    residual: float

    @property
    def is_bell_diagonal(self) -> bool:
        return self.residual <= BELL_DIAGONAL_TOL


def from_density_matrix(m, strict: bool = False) -> BellProjection:
    """Read off ``c_j = Tr[m σj⊗σj]`` and measure how Bell-diagonal ``m`` is.

    Parameters
    ----------
    m : array_like, shape (4, 4)
    strict : bool
        Raise :class:`NotBellDiagonal` instead of returning a projection with
        a large residual.
    """
    m = np.asarray(m, dtype=complex)
    c = tuple(float(np.trace(m @ np.kron(s, s)).real) for s in PAULIS)
    params = BellDiagonalParams(*c)
    residual = float(np.abs(m - _axis_matrix(params, PauliAxis.AXIS3)).max())
    if strict and residual > BELL_DIAGONAL_TOL:
        raise NotBellDiagonal(residual)
    return BellProjection(params, residual)


def reduced_state(m, subsystem: str = "A") -> np.ndarray:
    """Partial trace of a two-qubit matrix, keeping ``subsystem`` ('A' or 'B')."""
    t = np.asarray(m, dtype=complex).reshape(2, 2, 2, 2)
    if subsystem == "A":
        return np.einsum("ijkj->ik", t)
    if subsystem == "B":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def validate_density_matrix(m, herm_tol=1e-12, trace_tol=1e-12, psd_tol=1e-10) -> np.ndarray:
    """Return ``m`` as a complex array after checking it is a valid state."""
    m = np.array(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidDensityMatrix(f"expected a square matrix, got shape {m.shape}")
    herm = np.abs(m - m.conj().T).max()
    if herm > herm_tol:
        raise InvalidDensityMatrix(f"matrix not Hermitian (deviation {herm:.3e})")
    tr = np.trace(m)
    if abs(tr - 1) > trace_tol:
        raise InvalidDensityMatrix(f"trace {tr.real:.12g} != 1")
    wmin = np.linalg.eigvalsh((m + m.conj().T) / 2).min()
    if wmin < -psd_tol:
        raise InvalidDensityMatrix(f"matrix not positive semidefinite (eigenvalue {wmin:.3e})")
    return m


def random_physical_params(rng, n: int) -> list[BellDiagonalParams]:
    """Rejection-sample ``n`` states uniformly from the tetrahedron."""
    out = []
    while len(out) < n:
        c = rng.uniform(-1, 1, size=3)
        if is_physical(c):
            out.append(BellDiagonalParams(*(float(x) for x in c)))
    return out


def bell_state_vector(a: int, b: int) -> np.ndarray:
    """``(|0,b> + (-1)^a |1,1⊕b>) / sqrt(2)``"""
    v = np.zeros(4, dtype=complex)
    v[b] = 1
    v[2 + (1 ^ b)] = (-1) ** a
    return v / np.sqrt(2)


def parse_state(text: str) -> BellDiagonalParams:
    """Parse a ``c1,c2,c3`` literal such as ``0.6,-0.6,1``."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"state literal needs three comma-separated numbers, got {text!r}")
    try:
        vals = [float(s) for s in parts]
    except ValueError:
        raise ValueError(f"state literal is not numeric: {text!r}") from None
    if not all(np.isfinite(vals)):
        raise ValueError(f"state literal is not finite: {text!r}")
    return BellDiagonalParams(*vals)


def read_matrix(path) -> np.ndarray:
    """Read a 4x4 matrix: four lines of four ``re+imj`` entries each."""
    rows = []
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        rows.append([complex(tok) for tok in line.split()])
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise InvalidDensityMatrix(f"{path}: expected 4 lines of 4 entries")
    return np.array(rows, dtype=complex)


def format_matrix(m) -> str:
    lines = []
    for row in np.asarray(m, dtype=complex):
        lines.append(" ".join(f"{z.real:.12g}{z.imag:+.12g}j" for z in row))
    return "\n".join(lines) + "\n"
