import numpy as np
import pytest
from numpy.testing import assert_allclose

from bellcoh.errors import DomainError, InvalidDensityMatrix
from bellcoh.measures import mutual_information, quantum_discord
from bellcoh.oracle import (
    GridSpec,
    QubitMeasurementBasis,
    classical_mutual_information,
    conditional_entropy,
    discord_one_side,
    discord_relative_entropy,
    discord_two_side,
    mutual_information_matrix,
    verify_theorem1,
    verify_theorem2,
)
from bellcoh.qstate import to_density_matrix

import brute

H82 = -(0.8 * np.log2(0.8) + 0.2 * np.log2(0.2))
FIG3 = (0.6, -0.6, 1.0)
MIXED = np.eye(4) / 4
PRODUCT = np.kron(np.diag([1.0, 0.0]), np.full((2, 2), 0.5))


class TestBasis:
    @pytest.mark.parametrize("theta, phi", [(0, 0), (np.pi / 2, 0), (1.1, 2.3), (np.pi, 5.0)])
    def test_projectors(self, theta, phi):
        pp, pm = QubitMeasurementBasis(theta, phi).projectors()
        assert_allclose(pp + pm, np.eye(2), atol=1e-12)
        assert_allclose(pp @ pp, pp, atol=1e-12)
        assert_allclose(pm @ pm, pm, atol=1e-12)

    def test_bloch_direction(self):
        theta, phi = 0.7, 1.9
        pp, _ = QubitMeasurementBasis(theta, phi).projectors()
        n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
        ref = (np.eye(2) + sum(c * s for c, s in zip(n, brute.PAULI))) / 2
        assert_allclose(pp, ref, atol=1e-14)

    def test_unitary(self):
        u = QubitMeasurementBasis(0.4, 2.0).unitary()
        assert_allclose(u.conj().T @ u, np.eye(2), atol=1e-14)

    @pytest.mark.parametrize("kw", [{"n_theta": 1}, {"n_phi": 1}, {"refine_iters": -1},
                                    {"refine_shrink": 1.0}])
    def test_grid_validation(self, kw):
        with pytest.raises(DomainError):
            GridSpec(**kw)


class TestConditionalEntropy:
    def test_examples(self):
        assert conditional_entropy(MIXED, (0.3, 1.0)) == pytest.approx(1, abs=1e-12)
        bell = to_density_matrix((1, -1, 1))
        assert conditional_entropy(bell, (0, 0)) == pytest.approx(0, abs=1e-12)
        m = to_density_matrix((0.6, -0.36, 0.6))
        assert conditional_entropy(m, (0, 0)) == pytest.approx(H82, abs=1e-12)

    def test_antipodal(self, random_states, rng):
        for p in random_states[:30]:
            m = to_density_matrix(p)
            th, ph = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
            a = conditional_entropy(m, (th, ph))
            b = conditional_entropy(m, (np.pi - th, ph + np.pi))
            assert a == pytest.approx(b, abs=1e-10)

    def test_against_projector_loop(self, rng):
        for _ in range(10):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            m = a @ a.conj().T
            m /= np.trace(m).real
            th, ph = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
            ref = 0.0
            for proj in QubitMeasurementBasis(th, ph).projectors():
                big = np.kron(proj, brute.I2)
                sub = big @ m @ big
                pr = np.trace(sub).real
                ref += pr * brute.entropy(brute.ptrace(sub, "B") / pr)
            assert conditional_entropy(m, (th, ph)) == pytest.approx(ref, abs=1e-10)


class TestMutualInformation:
    def test_against_brute(self, rng):
        for _ in range(10):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            m = a @ a.conj().T
            m /= np.trace(m).real
            assert mutual_information_matrix(m) == pytest.approx(brute.mutual_info(m), abs=1e-10)

    def test_classical(self):
        assert classical_mutual_information(np.eye(2) / 2) == pytest.approx(1)
        assert classical_mutual_information(np.full((2, 2), 0.25)) == pytest.approx(0, abs=1e-15)


class TestOneSide:
    def test_mixed(self):
        assert discord_one_side(MIXED).value == pytest.approx(0, abs=1e-12)

    def test_fig3(self):
        res = discord_one_side(to_density_matrix(FIG3))
        assert res.value == pytest.approx(1 - H82, abs=1e-4)
        th = res.argmin_basis[0].theta
        assert min(th, np.pi - th) < 1e-6
        assert res.samples_evaluated == 4 * 64 * 64

    def test_werner(self):
        p = (-0.5, -0.5, -0.5)
        assert discord_one_side(to_density_matrix(p)).value == pytest.approx(quantum_discord(p), abs=1e-4)

    def test_random_bell_diagonal(self, random_states):
        for p in random_states[:20]:
            res = discord_one_side(to_density_matrix(p))
            assert res.value == pytest.approx(quantum_discord(p), abs=1e-4)
            assert -1e-9 <= res.value <= mutual_information(p) + 1e-9

    def test_general_state_bounds(self, rng):
        for _ in range(5):
            a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            m = a @ a.conj().T
            m /= np.trace(m).real
            res = discord_one_side(m, GridSpec(32, 32, 2))
            assert -1e-9 <= res.value <= mutual_information_matrix(m) + 1e-9
            # a finite cloud of directions can only find a larger value
            assert res.value <= brute.one_side_discord(m, n_dir=300) + 1e-4

    def test_grid_monotone(self, random_states):
        for p in random_states[:5]:
            m = to_density_matrix(p)
            coarse = discord_one_side(m, GridSpec(8, 8, 0)).value
            fine = discord_one_side(m, GridSpec(16, 16, 0)).value
            assert fine <= coarse + 1e-9

    def test_refinement_never_worse(self, random_states):
        for p in random_states[:5]:
            m = to_density_matrix(p)
            assert discord_one_side(m, GridSpec(8, 8, 3)).value <= discord_one_side(
                m, GridSpec(8, 8, 0)
            ).value + 1e-15

    def test_rejects_invalid(self):
        with pytest.raises(InvalidDensityMatrix):
            discord_one_side(np.eye(4))


class TestTwoSide:
    def test_mixed(self):
        assert discord_two_side(MIXED).value == pytest.approx(0, abs=1e-12)

    def test_fig3(self):
        assert discord_two_side(to_density_matrix(FIG3)).value == pytest.approx(1 - H82, abs=1e-3)

    def test_product(self):
        assert discord_two_side(PRODUCT).value == pytest.approx(0, abs=1e-9)


class TestRelativeEntropyDiscord:
    def test_mixed(self):
        assert discord_relative_entropy(MIXED).value == pytest.approx(0, abs=1e-12)

    @pytest.mark.parametrize("p", [FIG3, (1.0, -0.6, 0.6)])
    def test_examples(self, p):
        value = discord_relative_entropy(to_density_matrix(p)).value
        assert value == pytest.approx(1 - H82, abs=1e-3)

    def test_diagonal_in_grid_basis(self):
        m = np.diag([0.1, 0.2, 0.3, 0.4])
        assert discord_relative_entropy(m).value == pytest.approx(0, abs=1e-12)


class TestTheorems:
    def test_theorem1_fig3(self):
        rep = verify_theorem1(to_density_matrix(FIG3))
        assert rep.gap < 1e-12
        assert rep.lhs == pytest.approx(1 - H82, abs=1e-3)
        assert rep.closed_form_gap < 1e-3
        assert rep.rhs_at_argmin == pytest.approx(rep.lhs, abs=1e-12)

    def test_theorem1_mixed(self):
        rep = verify_theorem1(MIXED)
        assert rep.lhs == pytest.approx(0, abs=1e-12) and rep.rhs == pytest.approx(0, abs=1e-12)

    def test_theorem1_werner(self):
        rep = verify_theorem1(to_density_matrix((-0.5, -0.5, -0.5)))
        assert rep.closed_form_gap < 1e-3 and rep.gap < 1e-12

    def test_theorem1_general_state(self, rng):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = a @ a.conj().T
        rep = verify_theorem1(m / np.trace(m).real, GridSpec(8, 8, 2))
        assert rep.closed_form is None and rep.gap < 1e-12

    def test_theorem2_fig3(self):
        rep = verify_theorem2(to_density_matrix(FIG3))
        assert rep.c_a < 1e-9 and rep.c_b < 1e-9
        assert rep.gap < 1e-3

    def test_theorem2_mixed(self):
        rep = verify_theorem2(MIXED)
        assert_allclose([rep.d2, rep.c_ab, rep.c_a, rep.c_b], 0, atol=1e-12)

    def test_theorem2_product(self):
        rep = verify_theorem2(PRODUCT)
        assert rep.d2 == pytest.approx(0, abs=1e-6)
        assert rep.c_ab - rep.c_a - rep.c_b == pytest.approx(0, abs=1e-6)
