# ---
# jupyter:
#   jupytext:
#     formats: py:light
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Correlations and coherence of a Bell-diagonal state
#
# A Bell-diagonal state is fixed by three correlation coefficients
# `(c1, c2, c3)`.  Its spectrum is the four Bell weights, and every measure
# below has a closed form in those numbers.

# +
import numpy as np

from bellcoh import (
    PauliAxis,
    bell_eigenvalues,
    classical_correlation,
    coherence_l1,
    coherence_rel,
    mutual_information,
    optimal_axis,
    quantum_discord,
    to_density_matrix,
)

p = (0.6, -0.6, 1.0)
print("Bell weights:", bell_eigenvalues(p))
# -

# The σ3 representation has the two coherences sitting in the corners.

np.set_printoptions(precision=3, suppress=True)
print(to_density_matrix(p, PauliAxis.AXIS3).real)

# ## Mutual information splits into classical correlation plus discord

# +
i = mutual_information(p)
cc = classical_correlation(p)
d = quantum_discord(p)
print(f"I = {i:.6f}  CC = {cc:.6f}  D = {d:.6f}  I - CC - D = {i - cc - d:.1e}")
# -

# ## Discord is the coherence in the best Pauli basis
#
# The relative entropy of coherence depends on which Pauli eigenbasis is
# used.  Its minimum sits on the axis carrying the largest `|c_k|`, and
# there it equals the discord.

for axis in PauliAxis:
    print(f"axis {int(axis)}: C_r = {coherence_rel(p, axis):.6f}  C_l1 = {coherence_l1(p, axis):.3f}")
print("optimal axis:", int(optimal_axis(p)), " discord:", round(d, 6))

# Werner states are symmetric, so every axis gives the same value.

w = (-0.3, -0.3, -0.3)
print([round(coherence_rel(w, a), 12) for a in PauliAxis], round(quantum_discord(w), 12))
