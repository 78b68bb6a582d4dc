"""Decoherence trajectories of Bell-diagonal states.

Trajectories are sampled from the closed-form coefficient evolution, never
by chaining Kraus maps.  Around the transition time t̄ the largest |c_k|
moves onto the channel's constant axis; classical correlation and discord
swap which coherence expression they follow there, which shows up as a
kink in both curves.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import measures
from .channels import ChannelKind, ChannelSpec, evolve_params
from .entropy import cc_kernel
from .errors import DomainError, MissingTransition
from .measures import MeasureSet
from .qstate import BellDiagonalParams, PauliAxis, require_physical

FROZEN_TOL = 1e-9
FAMILY_TOL = 1e-12

MEASURE_COLUMNS = {
    "I": "mutual_info",
    "CC": "classical_corr",
    "D": "discord",
    "CRel1": "coherence_rel_1",
    "CRel2": "coherence_rel_2",
    "CRel3": "coherence_rel_3",
    "Cl1_1": "coherence_l1_1",
    "Cl1_2": "coherence_l1_2",
    "Cl1_3": "coherence_l1_3",
}


class Sample(NamedTuple):
    t: float
    params: BellDiagonalParams
    measures: MeasureSet


@dataclass(frozen=True)
class Trajectory:
    spec: ChannelSpec
    p0: BellDiagonalParams
    times: np.ndarray
    samples: tuple

    def __len__(self):
        return len(self.samples)

    def column(self, name: str) -> np.ndarray:
        """Values of one measure (short name like ``'CC'`` or a CSV column name)."""
        key = MEASURE_COLUMNS.get(name, name)
        if key in ("c1", "c2", "c3"):
            i = int(key[1]) - 1
            return np.array([s.params[i] for s in self.samples])
        return np.array([s.measures.as_dict()[key] for s in self.samples])

    def rows(self):
        """Dicts keyed by the CSV column names, in time order."""
        for s in self.samples:
            row = {"t": s.t, "c1": s.params.c1, "c2": s.params.c2, "c3": s.params.c3}
            row.update(s.measures.as_dict())
            yield row


def sweep_trajectory(p0, spec: ChannelSpec, t_max: float, steps: int) -> Trajectory:
    """Evaluate every measure on ``steps + 1`` uniform times in ``[0, t_max]``."""
    p0 = require_physical(p0)
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps!r}")
    if not (t_max > 0 and math.isfinite(t_max)):
        raise DomainError(f"t_max must be positive, got {t_max!r}")
    times = t_max * np.arange(steps + 1) / steps
    samples = []
    for t in times:
        p = evolve_params(p0, spec, float(t))
        samples.append(Sample(float(t), p, measures.measure_set(p)))
    return Trajectory(spec, p0, times, tuple(samples))


@dataclass(frozen=True)
class TransitionReport:
    """``status`` is ``'crossing'`` (finite t̄), ``'none'`` (the constant
    axis already dominates) or ``'infinite'`` (constant coefficient is 0)."""

    analytic_t: float | None
    status: str
    crossing: str | None
    detected_t: tuple = ()


def transition_time_analytic(p0, spec: ChannelSpec) -> TransitionReport:
    """Time at which the decaying max |c_m| meets the constant |c_k|.

    ``t̄ = ln(|c_m(0)| / |c_k|) / (2 γ)``.
    """
    p0 = require_physical(p0)
    k = spec.kind.axis
    ck = abs(p0.coefficient(k))
    damped = [a for a in PauliAxis if a != k]
    m = max(damped, key=lambda a: (abs(p0.coefficient(a)), -int(a)))
    cm = abs(p0.coefficient(m))
    crossing = f"|c{int(m)}(t)| = |c{int(k)}|"
    if ck >= cm:
        return TransitionReport(None, "none", None)
    if ck == 0:
        return TransitionReport(None, "infinite", crossing)
    return TransitionReport(math.log(cm / ck) / (2 * spec.gamma), "crossing", crossing)


def detect_sudden_change(traj: Trajectory, measure: str = "CC") -> list:
    """Times where the selected curve has a slope discontinuity.

    A sample is reported when its normalised second difference
    ``|f[i+1] - 2 f[i] + f[i-1]| / h**2`` exceeds ten times the median over
    the trajectory and a rounding floor, and is an interior local maximum.
    The local-maximum rule keeps the smooth but steep curvature near a
    tetrahedron edge (c -> 1) from registering.
    """
    if len(traj) < 5:
        raise DomainError("need at least 5 samples to detect sudden changes")
    f = traj.column(measure)
    t = traj.times
    h = t[1] - t[0]
    d2 = np.zeros_like(f)
    d2[1:-1] = np.abs(f[2:] - 2 * f[1:-1] + f[:-2]) / h**2
    noise = 1e-12 * max(1.0, float(np.abs(f).max())) / h**2
    threshold = max(10 * float(np.median(d2[1:-1])), noise)
    hits = []
    for i in range(2, len(f) - 2):
        if d2[i] > threshold and d2[i] > d2[i - 1] and d2[i] >= d2[i + 1]:
            hits.append(float(t[i]))
    return hits


def frozen_family_predicate(p0, kind) -> bool:
    """Initial-state condition for frozen coherence.

    Bit flip: ``c2 = -c1 c3``.  The same literal condition is applied for
    bit-phase flip (see :func:`empirical_frozen_check` for the actual
    behaviour).  Phase flip never freezes.
    """
    p0 = require_physical(p0)
    kind = ChannelKind(kind)
    if kind is ChannelKind.PHASEFLIP:
        return False
    return abs(p0.c2 + p0.c1 * p0.c3) <= FAMILY_TOL


class FrozenCheck(NamedTuple):
    is_frozen: bool
    max_deviation: float
    value: float


def empirical_frozen_check(traj: Trajectory, measure: str = "CRel3") -> FrozenCheck:
    f = traj.column(measure)
    dev = float(np.abs(f - f[0]).max())
    return FrozenCheck(dev <= FROZEN_TOL, dev, float(f[0]))


class RoleRow(NamedTuple):
    t: float
    label: str
    residual_pre: float
    residual_post: float


@dataclass(frozen=True)
class RoleTable:
    rows: tuple
    transition: TransitionReport
    axis: PauliAxis

    def active_residuals(self) -> np.ndarray:
        return np.array([r.residual_pre if r.label == "pre" else r.residual_post for r in self.rows])


def role_table(traj: Trajectory, require_transition: bool = False) -> RoleTable:
    """Which coherence expression CC and D follow at each sample.

    Before t̄: ``CC = cc_kernel(C_l1)``, ``D = I - CC``.  From t̄ on:
    ``D = C_r``, ``CC = I - C_r``.  Both use the channel's constant axis.
    Without a finite t̄ every sample carries the single branch that applies
    (all ``post`` when the constant axis dominates from the start, all
    ``pre`` when t̄ is infinite), unless ``require_transition`` is set.
    """
    tr = transition_time_analytic(traj.p0, traj.spec)
    if require_transition and tr.status != "crossing":
        raise MissingTransition(f"no finite transition time ({tr.status})")
    axis = traj.spec.kind.axis
    k = int(axis) - 1
    rows = []
    for s in traj.samples:
        ms = s.measures
        pre = abs(ms.classical_correlation - cc_kernel(min(ms.coherence_l1[k], 1.0)))
        post = abs(ms.discord - ms.coherence_rel[k])
        if tr.status == "crossing":
            at_boundary = abs(s.t - tr.analytic_t) <= 1e-12 * max(1.0, tr.analytic_t)
            label = "post" if (s.t > tr.analytic_t or at_boundary) else "pre"
        else:
            label = "pre" if tr.status == "infinite" else "post"
        rows.append(RoleRow(s.t, label, pre, post))
    return RoleTable(tuple(rows), tr, axis)
