# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Frozen coherence and the sudden change under flip noise
#
# Flip channels keep one correlation coefficient and damp the other two as
# `exp(-2 γ t)`.  We sweep two initial states and watch which coherence
# expression discord and classical correlation follow.

# +
import numpy as np

from bellcoh import (
    ChannelKind,
    ChannelSpec,
    detect_sudden_change,
    empirical_frozen_check,
    frozen_family_predicate,
    role_table,
    sweep_trajectory,
    transition_time_analytic,
)

bitflip = ChannelSpec(ChannelKind.BITFLIP, 0.1)
frozen = sweep_trajectory((0.6, -0.6, 1.0), bitflip, t_max=30, steps=300)
# -

# ## A state on the frozen surface
#
# `(0.6, -0.6, 1)` satisfies `c2 = -c1 c3`.  Under bit flip its σ3
# coherence never moves.

print("on the frozen surface:", frozen_family_predicate(frozen.p0, ChannelKind.BITFLIP))
print(empirical_frozen_check(frozen, "CRel3"))

# Discord stays put until t̄ while classical correlation falls, and then
# the two trade places.

tr = transition_time_analytic(frozen.p0, bitflip)
print(f"t̄ = {tr.analytic_t:.6f} ({tr.crossing})")
for t in (0.0, 1.0, 2.5, 2.6, 5.0, 20.0):
    k = int(round(t / 0.1))
    print(f"t={t:5.1f}  CC={frozen.column('CC')[k]:.6f}  D={frozen.column('D')[k]:.6f}")

# ## Decay with a kink
#
# Under phase flip, `(1, -0.6, 0.6)` loses coherence steadily.  Classical
# correlation has a slope jump at t̄, which the second-difference detector
# locates.

# +
phase = ChannelSpec(ChannelKind.PHASEFLIP, 0.1)
decay = sweep_trajectory((1.0, -0.6, 0.6), phase, t_max=30, steps=300)
print("kink detected at", detect_sudden_change(decay, "CC"))
print("analytic", transition_time_analytic(decay.p0, phase).analytic_t)
# -

# Before t̄, classical correlation is `cc_kernel` of the l1 coherence.
# After it, discord equals the relative-entropy coherence.  The residual of
# whichever branch is active stays at rounding level.

table = role_table(decay)
print("max active residual:", table.active_residuals().max())
print("labels switch at sample", [r.label for r in table.rows].index("post"))
