"""Test the dephasing channel: damping factors, Kraus operators and the element-wise map."""

import numpy as np
import pytest

from qdsim.channel.damping import DampingProfile, DecoherenceParams, damping_profile
from qdsim.channel import kraus
from qdsim.channel.kraus import (apply_channel, apply_local_channel, completeness, generalized_local_kraus,
                                 kraus_operators)
from qdsim.channel.matrix_form import damping_factors, damping_matrix_map
from qdsim.core.errors import DimensionError, DomainError
from qdsim.states.density_matrix import DensityMatrix
from qdsim.states.families import HorodeckiParams, basis_index, horodecki_state, max_entangled
from conftest import random_density_matrix


def test_profile_at_zero_time():
    profile = damping_profile(DecoherenceParams(0.7, 2.3), 0.0)
    assert (profile.gamma_a, profile.gamma_b, profile.gamma) == (1.0, 1.0, 1.0)
    for omega in (profile.omega_a, profile.omega_b, profile.omega1, profile.omega2, profile.omega3):
        assert omega == pytest.approx(0.0, abs=1e-15)


def test_profile_at_log_four():
    profile = damping_profile(DecoherenceParams(1.0, 1.0), np.log(4.0))
    assert profile.gamma_a == pytest.approx(0.5)
    assert profile.gamma_b == pytest.approx(0.5)
    assert profile.omega_a == pytest.approx(np.sqrt(3.0) / 2.0)
    assert profile.gamma == pytest.approx(0.5)
    assert profile.omega2 == pytest.approx(-0.25 * np.sqrt(0.75))


def test_profile_long_time_limits():
    profile = damping_profile(DecoherenceParams(1.0, 1.0), 100.0)
    assert profile.gamma_a == pytest.approx(0.0, abs=1e-12)
    assert profile.gamma == pytest.approx(0.0, abs=1e-12)
    assert profile.omega1 == pytest.approx(1.0)
    assert profile.omega2 == pytest.approx(0.0, abs=1e-12)
    assert profile.omega3 == pytest.approx(1.0)


def test_profile_rejects_negative_time_and_rates():
    with pytest.raises(DomainError):
        damping_profile(DecoherenceParams(), -0.1)
    with pytest.raises(DomainError):
        DecoherenceParams(-1.0, 1.0)
    with pytest.raises(DomainError):
        DampingProfile.from_factors(1.2, 1.0, 1.0)


def test_identity_channel_at_zero_time():
    operators = kraus_operators(damping_profile(DecoherenceParams(), 0.0))
    assert len(operators) == 27
    np.testing.assert_allclose(operators[0], np.eye(9), atol=1e-15)
    for op in operators[1:]:
        np.testing.assert_allclose(op, 0.0, atol=1e-15)


def test_kraus_operator_ordering():
    """G_n = E_i F_j D_k with k running fastest."""
    profile = damping_profile(DecoherenceParams(0.4, 0.9), 0.8)
    identity = np.eye(3)
    e = [np.kron(k, identity) for k in generalized_local_kraus(3, profile.gamma_a)]
    f = [np.kron(identity, k) for k in generalized_local_kraus(3, profile.gamma_b)]
    d = kraus.collective_kraus_operators(profile)
    operators = kraus_operators(profile)
    np.testing.assert_allclose(operators[1], e[0] @ f[0] @ d[1])
    np.testing.assert_allclose(operators[5], e[0] @ f[1] @ d[2])
    np.testing.assert_allclose(operators[26], e[2] @ f[2] @ d[2])


@pytest.mark.parametrize("gamma_t", [0.01, 0.1, 0.5, 2.0, 10.0])
def test_kraus_completeness(gamma_t):
    operators = kraus_operators(damping_profile(DecoherenceParams(1.0, 1.0), gamma_t))
    np.testing.assert_allclose(completeness(operators), np.eye(9), atol=1e-12)


def test_channel_and_matrix_form_agree(random_states, rng):
    triples = [(rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 2)) for _ in range(10)]
    for gamma1, gamma2, t in triples:
        profile = damping_profile(DecoherenceParams(gamma1, gamma2), t)
        for rho in random_states:
            np.testing.assert_allclose(apply_channel(rho, profile).matrix,
                                       damping_matrix_map(rho, profile).matrix, atol=1e-12)


def test_channel_is_identity_at_zero_time(random_states):
    profile = damping_profile(DecoherenceParams(), 0.0)
    for rho in random_states[:10]:
        np.testing.assert_allclose(apply_channel(rho, profile).matrix, rho.matrix, atol=1e-15)


def test_channel_preserves_trace_and_diagonal(random_states):
    profile = damping_profile(DecoherenceParams(1.3, 0.6), 0.9)
    for rho in random_states[:10]:
        evolved = apply_channel(rho, profile)
        assert evolved.trace == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(np.diag(evolved.matrix), np.diag(rho.matrix), atol=1e-14)


def test_long_time_horodecki_becomes_diagonal():
    rho = horodecki_state(HorodeckiParams(4.3))
    evolved = apply_channel(rho, damping_profile(DecoherenceParams(1.0, 1.0), 60.0))
    np.testing.assert_allclose(evolved.matrix - np.diag(np.diag(evolved.matrix)), 0.0, atol=1e-12)


def test_matrix_form_factors():
    profile = damping_profile(DecoherenceParams(0.8, 1.7), 0.6)
    factors = damping_factors(profile)
    np.testing.assert_allclose(np.diag(factors), 1.0)
    np.testing.assert_allclose(factors, factors.T)
    ga, gb, g = profile.gamma_a, profile.gamma_b, profile.gamma
    # 1-based (1,5) couples |2,2> and |1,1>; (5,9) couples |1,1> and |0,0>
    assert factors[0, 4] == pytest.approx(g ** 4 * ga * gb)
    assert factors[4, 8] == pytest.approx(ga ** 2 * gb ** 2)


def test_decoherence_free_entries_under_collective_noise(random_states):
    """With gamma_a = gamma_b = 1 the entries (2,4), (3,7), (5,9), (6,8) (1-based) never decay."""
    rho = random_states[0]
    for t in (0.3, 3.0, 30.0):
        evolved = damping_matrix_map(rho, damping_profile(DecoherenceParams(0.0, 1.0), t))
        for i, j in ((1, 3), (2, 6), (4, 8), (5, 7)):
            assert evolved.matrix[i, j] == pytest.approx(rho.matrix[i, j], abs=1e-15)


def test_wrong_dimension_rejected():
    qubits = max_entangled(2)
    profile = damping_profile(DecoherenceParams(), 0.5)
    with pytest.raises(DimensionError):
        apply_channel(qubits, profile)
    with pytest.raises(DimensionError):
        damping_matrix_map(qubits, profile)


def test_generalized_local_kraus_qutrit():
    g = 0.6
    w = np.sqrt(1 - g ** 2)
    ops = generalized_local_kraus(3, g)
    np.testing.assert_allclose(ops[0], np.diag([1, g, g]))
    np.testing.assert_allclose(ops[1], np.diag([0, w, 0]))
    np.testing.assert_allclose(ops[2], np.diag([0, 0, w]))


def test_generalized_local_kraus_qubit():
    ops = generalized_local_kraus(2, 0.3)
    assert len(ops) == 2
    np.testing.assert_allclose(completeness(ops), np.eye(2), atol=1e-15)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_generalized_local_kraus_completeness(d):
    ops = generalized_local_kraus(d, 0.45)
    assert len(ops) == d
    np.testing.assert_allclose(completeness(ops), np.eye(d), atol=1e-14)


def test_generalized_local_kraus_undamped():
    ops = generalized_local_kraus(4, 1.0)
    np.testing.assert_allclose(ops[0], np.eye(4))
    for op in ops[1:]:
        np.testing.assert_allclose(op, 0.0)


def test_generalized_local_kraus_rejects_small_dimension():
    with pytest.raises(DomainError):
        generalized_local_kraus(1, 0.5)


def test_local_channel_reduces_to_global_without_collective_noise(random_states):
    rho = random_states[3]
    profile = damping_profile(DecoherenceParams(1.4, 0.0), 0.7)
    np.testing.assert_allclose(apply_local_channel(rho, profile.gamma_a, profile.gamma_b).matrix,
                               apply_channel(rho, profile).matrix, atol=1e-14)


def test_local_channel_on_ququarts(rng):
    rho = DensityMatrix(random_density_matrix(rng, 16), 4, 4)
    g = 0.5
    evolved = apply_local_channel(rho, g, g)
    assert evolved.trace == pytest.approx(1.0, abs=1e-12)
    # the top level is undamped: |3,3>-|2,2> decays as g per party, |1,1>-|0,0> as g^2 per party
    i, j = basis_index(3, 3, 4), basis_index(2, 2, 4)
    assert evolved.matrix[i, j] == pytest.approx(g ** 2 * rho.matrix[i, j])
    i, j = basis_index(1, 1, 4), basis_index(0, 0, 4)
    assert evolved.matrix[i, j] == pytest.approx(g ** 4 * rho.matrix[i, j])


@pytest.mark.parametrize("gamma_t", [0.0, 0.05, 0.7, 3.0, 25.0])
def test_collective_factor_identities(gamma_t):
    profile = damping_profile(DecoherenceParams(0.0, 1.0), gamma_t)
    g2 = profile.gamma ** 2
    assert g2 + profile.omega1 * profile.omega2 == pytest.approx(profile.gamma ** 4, abs=1e-12)
    assert g2 + profile.omega2 ** 2 + profile.omega3 ** 2 == pytest.approx(1.0, abs=1e-12)


def test_multilocal_composition(random_states):
    rates = DecoherenceParams(1.3, 0.0)
    for t1, t2 in ((0.1, 0.4), (0.75, 1.2), (2.0, 0.3)):
        for rho in random_states[:10]:
            stepped = apply_channel(apply_channel(rho, damping_profile(rates, t1)), damping_profile(rates, t2))
            direct = apply_channel(rho, damping_profile(rates, t1 + t2))
            np.testing.assert_allclose(stepped.matrix, direct.matrix, atol=1e-12)


@pytest.mark.parametrize("kets", [((2, 1), (1, 2)), ((1, 0), (0, 1)), ((2, 0), (0, 2))])
def test_decoherence_free_subspaces_are_fixed(rng, kets):
    indices = [basis_index(a, b) for a, b in kets]
    matrix = np.zeros((9, 9), dtype=np.complex128)
    matrix[np.ix_(indices, indices)] = random_density_matrix(rng, 2)
    rho = DensityMatrix(matrix)
    for t in (0.5, 5.0, 50.0):
        profile = damping_profile(DecoherenceParams(0.0, 2.0), t)
        np.testing.assert_allclose(apply_channel(rho, profile).matrix, rho.matrix, atol=1e-14)
        np.testing.assert_allclose(damping_matrix_map(rho, profile).matrix, rho.matrix, atol=1e-15)
    # local fields do dephase the same subspace
    i, j = indices
    evolved = damping_matrix_map(rho, damping_profile(DecoherenceParams(1.0, 0.0), 1.0))
    assert abs(evolved.matrix[i, j]) < abs(rho.matrix[i, j])
