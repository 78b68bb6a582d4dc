"""Numerical discord for arbitrary two-qubit states.

Discord-type quantities are optimised over rank-1 projective qubit
measurements, parameterised by Bloch angles.  The optimiser evaluates a
coarse (theta, phi) grid and then refines around the incumbent in windows
that shrink by ``GridSpec.refine_shrink`` each round.  Everything is
vectorised over grid points; the argmin is the first minimum in grid
enumeration order, which keeps results deterministic.

These routines are independent of the Bell-diagonal closed forms in
:mod:`bellcoh.measures` and are used to check them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import measures
from .entropy import qubit_entropy_from_bloch, shannon_entropy, von_neumann_entropy, xlog2x
from .errors import DomainError
from .qstate import PAULIS, from_density_matrix, reduced_state, validate_density_matrix

PROB_FLOOR = 1e-12


class QubitMeasurementBasis(NamedTuple):
    """Projective qubit measurement along Bloch direction (theta, phi)."""

    theta: float
    phi: float

    def vectors(self) -> np.ndarray:
        """Rows are the '+' and '-' outcome kets."""
        return _basis_vectors(np.array([self.theta]), np.array([self.phi]))[0]

    def unitary(self) -> np.ndarray:
        """Columns are the outcome kets."""
        return self.vectors().T

    def projectors(self) -> np.ndarray:
        v = self.vectors()
        return np.einsum("ai,aj->aij", v, v.conj())


def _basis_vectors(theta, phi) -> np.ndarray:
    """Shape (N, 2 outcomes, 2 components)."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    e = np.exp(1j * phi)
    out = np.empty(theta.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = c
    out[..., 0, 1] = e * s
    out[..., 1, 0] = -np.conj(e) * s
    out[..., 1, 1] = c
    return out


@dataclass(frozen=True)
class GridSpec:
    """Angle grid: ``n_theta`` polar values ``pi*i/n_theta`` times ``n_phi``
    azimuths ``2*pi*j/n_phi``, then ``refine_iters`` local refinements."""

    n_theta: int = 64
    n_phi: int = 64
    refine_iters: int = 3
    refine_shrink: float = 0.5

    def __post_init__(self):
        if self.n_theta < 2 or self.n_phi < 2:
            raise DomainError("grid needs n_theta >= 2 and n_phi >= 2")
        if self.refine_iters < 0:
            raise DomainError("refine_iters must be non-negative")
        if not 0 < self.refine_shrink < 1:
            raise DomainError("refine_shrink must lie in (0, 1)")


ONE_SIDE_GRID = GridSpec(64, 64, 3, 0.5)
TWO_SIDE_GRID = GridSpec(16, 16, 3, 0.5)


@dataclass(frozen=True)
class OptimizationResult:
    value: float
    argmin_basis: tuple
    grid: GridSpec
    samples_evaluated: int


def mutual_information_matrix(m) -> float:
    """``S(A) + S(B) - S(AB)`` for a general two-qubit state."""
    m = np.asarray(m, dtype=complex)
    return (
        von_neumann_entropy(reduced_state(m, "A"))
        + von_neumann_entropy(reduced_state(m, "B"))
        - von_neumann_entropy(m)
    )


# ---------------------------------------------------------------- grids


def _coarse_side(grid: GridSpec):
    th = np.pi * np.arange(grid.n_theta) / grid.n_theta
    ph = 2 * np.pi * np.arange(grid.n_phi) / grid.n_phi
    t, p = np.meshgrid(th, ph, indexing="ij")
    return t.ravel(), p.ravel()


def _window_side(grid: GridSpec, centre, level: int):
    half_t = np.pi / 2 * grid.refine_shrink**level
    half_p = np.pi * grid.refine_shrink**level
    th = np.clip(np.linspace(centre[0] - half_t, centre[0] + half_t, grid.n_theta), 0.0, np.pi)
    ph = np.mod(np.linspace(centre[1] - half_p, centre[1] + half_p, grid.n_phi), 2 * np.pi)
    t, p = np.meshgrid(th, ph, indexing="ij")
    return t.ravel(), p.ravel()


def _minimise(objective, n_sides: int, grid: GridSpec, trace=None):
    """Grid search plus refinement.

    ``objective`` receives one ``(theta, phi)`` array pair per measured
    qubit and returns values broadcast as an outer product over sides.
    ``trace``, if given, collects the side grids of every round.
    """
    sides = [_coarse_side(grid)] * n_sides
    best_val = np.inf
    best = None
    count = 0
    for level in range(grid.refine_iters + 1):
        if level > 0:
            sides = [_window_side(grid, c, level) for c in best]
        if trace is not None:
            trace.append(sides)
        vals = np.asarray(objective(*sides))
        count += vals.size
        idx = int(np.argmin(vals))
        if vals.flat[idx] < best_val:
            best_val = float(vals.flat[idx])
            multi = np.unravel_index(idx, vals.shape)
            best = [(float(s[0][i]), float(s[1][i])) for s, i in zip(sides, multi)]
    return best_val, [QubitMeasurementBasis(*b) for b in best], count


# ---------------------------------------------------- measurement kernels


def _conditional_states(m, theta, phi):
    """Unnormalised B states after measuring A: shape (N, 2 outcomes, 2, 2)."""
    t = np.asarray(m, dtype=complex).reshape(2, 2, 2, 2)
    v = _basis_vectors(theta, phi)
    return np.einsum("nai,ijkl,nak->najl", v.conj(), t, v)


def _conditional_entropy_batch(m, theta, phi) -> np.ndarray:
    sig = _conditional_states(m, theta, phi)
    p = np.einsum("najj->na", sig).real
    bloch = np.stack([np.einsum("najl,lj->na", sig, s).real for s in PAULIS], axis=-1)
    safe = np.where(p > PROB_FLOOR, p, 1.0)
    r = np.linalg.norm(bloch, axis=-1) / safe
    s = np.where(p > PROB_FLOOR, p * qubit_entropy_from_bloch(r), 0.0)
    return s.sum(axis=-1)


def _joint_probabilities(m, side_a, side_b) -> np.ndarray:
    """``p[x, y, a, b]`` for basis x on A and basis y on B."""
    t = np.asarray(m, dtype=complex).reshape(2, 2, 2, 2)
    va = _basis_vectors(*side_a)
    vb = _basis_vectors(*side_b)
    half = np.einsum("xai,ijkl,xak->xajl", va.conj(), t, va)
    p = np.einsum("ybj,xajl,ybl->xyab", vb.conj(), half, vb).real
    return np.clip(p, 0.0, None)


def _entropy_last(p, axes) -> np.ndarray:
    return -xlog2x(p).sum(axis=axes)


def conditional_entropy(m, basis) -> float:
    """``sum_a p_a S(rho_B|a)`` after measuring qubit A in ``basis``."""
    basis = QubitMeasurementBasis(*basis)
    return float(_conditional_entropy_batch(m, [basis.theta], [basis.phi])[0])


def _prepare(m):
    return validate_density_matrix(m, herm_tol=1e-10, trace_tol=1e-8)


def discord_one_side(m, grid: GridSpec = ONE_SIDE_GRID) -> OptimizationResult:
    """Measurement-minimised ``I - [S(B) - S(B|{Pi_a})]`` with A measured."""
    m = _prepare(m)
    mi = mutual_information_matrix(m)
    sb = von_neumann_entropy(reduced_state(m, "B"))

    def objective(side):
        return mi - (sb - _conditional_entropy_batch(m, *side))

    value, bases, n = _minimise(objective, 1, grid)
    return OptimizationResult(value, tuple(bases), grid, n)


def discord_two_side(m, grid: GridSpec = TWO_SIDE_GRID) -> OptimizationResult:
    """``I`` minus the best classical mutual information of local product measurements."""
    m = _prepare(m)
    mi = mutual_information_matrix(m)

    def objective(side_a, side_b):
        p = _joint_probabilities(m, side_a, side_b)
        ic = (
            _entropy_last(p.sum(axis=3), -1)
            + _entropy_last(p.sum(axis=2), -1)
            - _entropy_last(p, (-2, -1))
        )
        return mi - ic

    value, bases, n = _minimise(objective, 2, grid)
    return OptimizationResult(value, tuple(bases), grid, n)


def discord_relative_entropy(m, grid: GridSpec = TWO_SIDE_GRID, _trace=None) -> OptimizationResult:
    """Minimum over local product bases of ``H(diagonal in that basis) - S(m)``."""
    m = _prepare(m)
    s = von_neumann_entropy(m)

    def objective(side_a, side_b):
        return _entropy_last(_joint_probabilities(m, side_a, side_b), (-2, -1)) - s

    value, bases, n = _minimise(objective, 2, grid, trace=_trace)
    return OptimizationResult(value, tuple(bases), grid, n)


# ------------------------------------------------------------- theorems


def _coherence_over_product_grid(m, side_a, side_b) -> np.ndarray:
    """Relative-entropy coherence of ``m`` in every product basis, built from
    full 4x4 unitaries rather than projector contractions."""
    ua = np.swapaxes(_basis_vectors(*side_a), -1, -2)
    ub = np.swapaxes(_basis_vectors(*side_b), -1, -2)
    u = np.einsum("xik,yjl->xyijkl", ua, ub).reshape(len(ua), len(ub), 4, 4)
    diag = np.einsum("xyik,ij,xyjk->xyk", u.conj(), m, u).real
    return -xlog2x(np.clip(diag, 0.0, None)).sum(axis=-1) - von_neumann_entropy(m)


@dataclass(frozen=True)
class Theorem1Report:
    lhs: float
    rhs: float
    gap: float
    rhs_at_argmin: float
    closed_form: float | None
    closed_form_gap: float | None


def verify_theorem1(m, grid: GridSpec = TWO_SIDE_GRID) -> Theorem1Report:
    """Relative-entropy discord against the minimum coherence over the same bases.

    ``lhs`` minimises the Shannon entropy of product-measurement outcomes;
    ``rhs`` minimises :func:`coherence_rel_matrix`-style dephasing over every
    basis the ``lhs`` search visited.  When ``m`` is Bell-diagonal the closed
    form discord is attached too.
    """
    m = _prepare(m)
    trace = []
    res = discord_relative_entropy(m, grid, _trace=trace)
    rhs = min(float(_coherence_over_product_grid(m, a, b).min()) for a, b in trace)
    ba, bb = res.argmin_basis
    at_arg = measures.coherence_rel_matrix(m, (ba.unitary(), bb.unitary()))
    closed = gap_cf = None
    proj = from_density_matrix(m)
    if proj.is_bell_diagonal:
        closed = measures.quantum_discord(proj.params)
        gap_cf = abs(res.value - closed)
    return Theorem1Report(res.value, rhs, abs(res.value - rhs), at_arg, closed, gap_cf)


@dataclass(frozen=True)
class Theorem2Report:
    d2: float
    c_ab: float
    c_a: float
    c_b: float
    gap: float
    basis: tuple


def verify_theorem2(m, grid: GridSpec = TWO_SIDE_GRID) -> Theorem2Report:
    """Two-side discord against bipartite minus local coherence at the optimum."""
    m = _prepare(m)
    res = discord_two_side(m, grid)
    ba, bb = res.argmin_basis
    ua, ub = ba.unitary(), bb.unitary()
    c_ab = measures.coherence_rel_matrix(m, (ua, ub))
    c_a = measures.coherence_rel_matrix(reduced_state(m, "A"), ua)
    c_b = measures.coherence_rel_matrix(reduced_state(m, "B"), ub)
    return Theorem2Report(res.value, c_ab, c_a, c_b, abs(res.value - (c_ab - c_a - c_b)), res.argmin_basis)


def classical_mutual_information(p) -> float:
    """``H(A) + H(B) - H(AB)`` of a 2-D joint distribution."""
    p = np.asarray(p, dtype=float)
    return shannon_entropy(p.sum(axis=1)) + shannon_entropy(p.sum(axis=0)) - shannon_entropy(p)
