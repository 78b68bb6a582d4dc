"""Brute-force reference computations for the tests.

Nothing here imports bellcoh: states are built from Pauli Kronecker
products and spectra come from numpy/scipy.
"""
import numpy as np
import scipy.linalg

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (X, Y, Z)


def bell_diagonal(c1, c2, c3):
    return (np.kron(I2, I2) + c1 * np.kron(X, X) + c2 * np.kron(Y, Y) + c3 * np.kron(Z, Z)) / 4


def entropy(m):
    w = np.linalg.eigvalsh(m)
    w = w[w > 1e-14]
    return float(-(w * np.log2(w)).sum())


def shannon(p):
    p = np.asarray(p, dtype=float).ravel()
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def ptrace(m, keep):
    m = m.reshape(2, 2, 2, 2)
    out = np.zeros((2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                if keep == "A":
                    out[i, j] += m[i, k, j, k]
                else:
                    out[i, j] += m[k, i, k, j]
    return out


def mutual_info(m):
    return entropy(ptrace(m, "A")) + entropy(ptrace(m, "B")) - entropy(m)


def relent_logm(rho, delta):
    """Tr rho (log2 rho - log2 delta) via matrix logarithms on full-rank inputs."""
    l_rho = scipy.linalg.logm(rho) / np.log(2)
    l_delta = scipy.linalg.logm(delta) / np.log(2)
    return float(np.trace(rho @ (l_rho - l_delta)).real)


def coherence_rel(m):
    return shannon(np.diag(m).real) - entropy(m)


def hadamard_rotate(m, axis):
    """Rewrite m in the σ1 (axis=1) or σ2 (axis=2) eigenbasis on both qubits."""
    if axis == 3:
        return m
    if axis == 1:
        u = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    else:
        # maps σ2 -> σ3, σ3 -> σ1, σ1 -> σ2 under conjugation
        u = np.array([[1, -1j], [1, 1j]]) / np.sqrt(2)
    uu = np.kron(u, u)
    return uu @ m @ uu.conj().T


def one_side_discord(m, n_dir=2000, seed=0):
    """Discord from a quasi-uniform cloud of measurement directions plus the six axes."""
    rng = np.random.default_rng(seed)
    dirs = rng.normal(size=(n_dir, 3))
    dirs = np.vstack([dirs, np.eye(3), -np.eye(3)])
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    sb = entropy(ptrace(m, "B"))
    best = -np.inf
    for n in dirs:
        ns = n[0] * X + n[1] * Y + n[2] * Z
        cond = 0.0
        for sgn in (1, -1):
            proj = np.kron((I2 + sgn * ns) / 2, I2)
            sub = proj @ m @ proj
            p = np.trace(sub).real
            if p > 1e-12:
                cond += p * entropy(ptrace(sub, "B") / p)
        best = max(best, sb - cond)
    return mutual_info(m) - best
