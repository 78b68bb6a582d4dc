"""Pauli flip channels acting on both qubits.

A single-qubit flip channel with strength ``q`` has Kraus operators
``sqrt(1 - q/2) I`` and ``sqrt(q/2) σ``.  It shrinks the two Bloch
components transverse to σ by ``1 - q``; on both qubits the transverse
correlation coefficients shrink by ``(1 - q)**2``.  With
``q(t) = 1 - exp(-γ t)`` that is the ``exp(-2 γ t)`` decay used by
:func:`evolve_params`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NegativeTime
from .qstate import IDENTITY, BellDiagonalParams, PauliAxis, require_physical


class ChannelKind(enum.Enum):
    BITFLIP = "bitflip"
    PHASEFLIP = "phaseflip"
    BITPHASEFLIP = "bitphaseflip"

    @property
    def axis(self) -> PauliAxis:
        """The Pauli axis the channel leaves untouched."""
        return _KIND_AXIS[self]

    @classmethod
    def parse(cls, name: str) -> "ChannelKind":
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown channel {name!r} (choose from {choices})") from None


_KIND_AXIS = {
    ChannelKind.BITFLIP: PauliAxis.AXIS1,
    ChannelKind.BITPHASEFLIP: PauliAxis.AXIS2,
    ChannelKind.PHASEFLIP: PauliAxis.AXIS3,
}


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ChannelKind(self.kind))
        if not (self.gamma > 0 and math.isfinite(self.gamma)):
            raise DomainError(f"damping rate must be positive, got {self.gamma!r}")


def noise_strength(gamma: float, t: float) -> float:
    """``q(t) = 1 - exp(-γ t)``."""
    if t < 0:
        raise NegativeTime(f"time must be non-negative, got {t!r}")
    return -math.expm1(-gamma * t)


def kraus_operators(kind, q: float) -> tuple[np.ndarray, np.ndarray]:
    kind = ChannelKind(kind)
    if not (-1e-15 <= q <= 1 + 1e-15):
        raise DomainError(f"noise strength must lie in [0, 1], got {q!r}")
    q = min(max(q, 0.0), 1.0)
    return (math.sqrt(1 - q / 2) * IDENTITY, math.sqrt(q / 2) * kind.axis.pauli)


def apply_channel_one(m, kind, q: float, subsystem: str = "A") -> np.ndarray:
    """Channel on one qubit only; not used by the evolution contract."""
    m = np.asarray(m, dtype=complex)
    out = np.zeros_like(m)
    for k in kraus_operators(kind, q):
        op = np.kron(k, IDENTITY) if subsystem == "A" else np.kron(IDENTITY, k)
        out += op @ m @ op.conj().T
    return out


def apply_channel_both(m, kind, q: float) -> np.ndarray:
    """``sum_ij (K_i ⊗ K_j) m (K_i ⊗ K_j)^†``."""
    m = np.asarray(m, dtype=complex)
    ks = kraus_operators(kind, q)
    out = np.zeros_like(m)
    for ka in ks:
        for kb in ks:
            op = np.kron(ka, kb)
            out += op @ m @ op.conj().T
    return out


def evolve_params(p0, spec: ChannelSpec, t: float) -> BellDiagonalParams:
    """Closed-form coefficients at time ``t``.

    The coefficient on the channel's own axis is constant, the other two
    decay as ``exp(-2 γ t)``.
    """
    p0 = require_physical(p0)
    if t < 0:
        raise NegativeTime(f"time must be non-negative, got {t!r}")
    decay = math.exp(-2 * spec.gamma * t)
    keep = int(spec.kind.axis) - 1
    return BellDiagonalParams(*(c if i == keep else c * decay for i, c in enumerate(p0)))
