import numpy as np
import pytest
from numpy.testing import assert_allclose

from bellcoh.errors import InvalidBasis, NonPhysicalState
from bellcoh.measures import (
    classical_correlation,
    classify_region,
    coherence_l1,
    coherence_l1_matrix,
    coherence_rel,
    coherence_rel_matrix,
    measure_set,
    mutual_information,
    optimal_axis,
    quantum_discord,
)
from bellcoh.qstate import PauliAxis, to_density_matrix

import brute

H82 = -(0.8 * np.log2(0.8) + 0.2 * np.log2(0.2))
FIG3 = (0.6, -0.6, 1.0)
FIG4 = (1.0, -0.6, 0.6)
AXES = list(PauliAxis)


class TestExamples:
    @pytest.mark.parametrize(
        "p, expected", [((0, 0, 0), 0.0), (FIG3, 2 - H82), ((1, -1, 1), 2.0)]
    )
    def test_mutual_information(self, p, expected):
        assert mutual_information(p) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize(
        "p, expected", [((0, 0, 0), 0.0), (FIG3, 1.0), ((0.6, -0.36, 0.6), 1 - H82)]
    )
    def test_classical_correlation(self, p, expected):
        assert classical_correlation(p) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize(
        "p, expected", [((0, 0, 0), 0.0), (FIG3, 1 - H82), ((1, -1, 1), 1.0)]
    )
    def test_discord(self, p, expected):
        assert quantum_discord(p) == pytest.approx(expected, abs=1e-12)

    def test_coherence_rel(self):
        for axis in AXES:
            assert coherence_rel((0, 0, 0), axis) == pytest.approx(0, abs=1e-14)
        assert coherence_rel(FIG3, PauliAxis.AXIS3) == pytest.approx(0.278072, abs=1e-6)
        assert coherence_rel(FIG4, PauliAxis.AXIS3) == pytest.approx(1.0, abs=1e-12)

    def test_coherence_l1(self):
        assert coherence_l1((0, 0, 0)) == 0
        assert coherence_l1(FIG3, PauliAxis.AXIS3) == pytest.approx(0.6, abs=1e-15)
        assert coherence_l1(FIG4, PauliAxis.AXIS3) == pytest.approx(1.0, abs=1e-15)
        assert coherence_l1(FIG4, PauliAxis.AXIS1) == pytest.approx(0.6, abs=1e-15)
        assert coherence_l1(FIG4, PauliAxis.AXIS2) == pytest.approx(1.0, abs=1e-15)

    def test_rejects_unphysical(self):
        for f in (mutual_information, classical_correlation, quantum_discord, coherence_rel):
            with pytest.raises(NonPhysicalState):
                f((1, 1, 1))


class TestAgainstBruteForce:
    def test_mutual_information(self, random_states):
        for p in random_states[:200]:
            assert mutual_information(p) == pytest.approx(
                brute.mutual_info(brute.bell_diagonal(*p)), abs=1e-10
            )

    @pytest.mark.parametrize("axis", AXES)
    def test_coherence_rel(self, random_states, axis):
        for p in random_states[:200]:
            m = brute.hadamard_rotate(brute.bell_diagonal(*p), int(axis))
            assert coherence_rel(p, axis) == pytest.approx(brute.coherence_rel(m), abs=1e-10)

    @pytest.mark.parametrize("axis", AXES)
    def test_coherence_l1(self, random_states, axis):
        for p in random_states[:200]:
            m = brute.hadamard_rotate(brute.bell_diagonal(*p), int(axis))
            off = np.abs(m).sum() - np.abs(np.diag(m)).sum()
            assert coherence_l1(p, axis) == pytest.approx(off, abs=1e-12)

    def test_discord_sampled_directions(self, rng):
        # the direction cloud can only overestimate the minimum
        for p in [FIG3, FIG4, (0.3, -0.2, 0.1), (-0.5, -0.5, -0.5)]:
            d = brute.one_side_discord(brute.bell_diagonal(*p), n_dir=400)
            assert d == pytest.approx(quantum_discord(p), abs=1e-9)


class TestIdentities:
    def test_additivity(self, random_states):
        for p in random_states:
            i = mutual_information(p)
            assert i == pytest.approx(classical_correlation(p) + quantum_discord(p), abs=1e-12)

    def test_discord_is_optimal_axis_coherence(self, random_states):
        for p in random_states:
            d = quantum_discord(p)
            assert d == pytest.approx(coherence_rel(p, optimal_axis(p)), abs=1e-12)
            assert all(coherence_rel(p, a) >= d - 1e-12 for a in AXES)

    @pytest.mark.parametrize("t", [0.0, 0.1, 0.25, 1 / 3])
    @pytest.mark.parametrize("signs", [(1, 1, 1), (-1, -1, -1), (1, -1, 1)])
    def test_werner_line(self, t, signs):
        p = tuple(s * t for s in signs)
        d = quantum_discord(p)
        for a in AXES:
            assert coherence_rel(p, a) == pytest.approx(d, abs=1e-12)

    def test_ordering(self, random_states):
        for p in random_states:
            assert 0 <= classical_correlation(p) <= 1 + 1e-12
            assert quantum_discord(p) >= -1e-12
            assert mutual_information(p) <= 2 + 1e-12


class TestMatrixForms:
    def test_rel_equals_closed_form(self, random_states):
        for p in random_states[:100]:
            m = to_density_matrix(p, PauliAxis.AXIS3)
            assert coherence_rel_matrix(m) == pytest.approx(coherence_rel(p), abs=1e-10)

    def test_rel_examples(self):
        assert coherence_rel_matrix(np.diag([0.1, 0.2, 0.3, 0.4])) == pytest.approx(0, abs=1e-12)
        plus = np.full((2, 2), 0.5)
        zero = np.diag([1.0, 0.0])
        assert coherence_rel_matrix(np.kron(plus, zero)) == pytest.approx(1.0, abs=1e-12)

    def test_rel_in_eigenbasis(self, rng):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = a @ a.conj().T
        m /= np.trace(m).real
        _, v = np.linalg.eigh(m)
        assert coherence_rel_matrix(m, v) == pytest.approx(0, abs=1e-10)

    def test_rel_product_basis(self, random_states):
        h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        for p in random_states[:50]:
            m = to_density_matrix(p, PauliAxis.AXIS3)
            assert coherence_rel_matrix(m, (h, h)) == pytest.approx(
                coherence_rel(p, PauliAxis.AXIS1), abs=1e-10
            )

    def test_rel_single_qubit(self):
        plus = np.full((2, 2), 0.5)
        assert coherence_rel_matrix(plus) == pytest.approx(1.0, abs=1e-12)

    def test_bad_basis(self):
        m = np.eye(4) / 4
        with pytest.raises(InvalidBasis):
            coherence_rel_matrix(m, np.ones((4, 4)))
        with pytest.raises(InvalidBasis):
            coherence_rel_matrix(m, np.eye(2))

    def test_l1_examples(self):
        assert coherence_l1_matrix(np.diag([0.5, 0.5, 0, 0])) == 0
        assert coherence_l1_matrix(to_density_matrix((1, -1, 1))) == pytest.approx(1.0, abs=1e-15)
        # two corner entries of modulus 0.3
        assert coherence_l1_matrix(to_density_matrix(FIG3)) == pytest.approx(0.6, abs=1e-15)

    @pytest.mark.parametrize("axis", AXES)
    def test_l1_matrix_matches_closed_form(self, random_states, axis):
        for p in random_states[:100]:
            m = to_density_matrix(p, axis)
            assert coherence_l1_matrix(m) == pytest.approx(coherence_l1(p, axis), abs=1e-12)


class TestRegions:
    def test_optimal_axis(self):
        assert optimal_axis(FIG3) is PauliAxis.AXIS3
        assert optimal_axis(FIG4) is PauliAxis.AXIS1
        assert optimal_axis((-0.5, -0.5, -0.5)) is PauliAxis.AXIS1

    def test_classify(self):
        assert classify_region(FIG3).label == "C3"
        assert classify_region((-0.5, -0.5, -0.5)).label == "BOUNDARY"
        r = classify_region((0, 0, 0.3))
        assert r.axis is PauliAxis.AXIS3 and not r.boundary
        assert classify_region((0.4, 0.4 + 1e-10, 0)).boundary
        assert not classify_region((0.4, 0.4 + 1e-8, 0)).boundary


class TestMeasureSet:
    def test_matches_individual(self, random_states):
        for p in random_states[:200]:
            ms = measure_set(p)
            assert ms.mutual_information == pytest.approx(mutual_information(p), abs=1e-15)
            assert ms.classical_correlation == pytest.approx(classical_correlation(p), abs=1e-15)
            assert ms.discord == pytest.approx(quantum_discord(p), abs=1e-15)
            assert_allclose(ms.coherence_rel, [coherence_rel(p, a) for a in AXES], atol=1e-15)
            assert_allclose(ms.coherence_l1, [coherence_l1(p, a) for a in AXES], atol=1e-15)
            assert ms.optimal_axis is optimal_axis(p)
            assert ms.region == classify_region(p).label

    def test_as_dict_keys(self):
        keys = list(measure_set(FIG3).as_dict())
        assert keys == [
            "mutual_info", "classical_corr", "discord",
            "coherence_rel_1", "coherence_rel_2", "coherence_rel_3",
            "coherence_l1_1", "coherence_l1_2", "coherence_l1_3",
            "optimal_axis", "region",
        ]
