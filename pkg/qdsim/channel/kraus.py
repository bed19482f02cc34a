import numpy as np
from .damping import DampingProfile
from ..core.errors import DimensionError, DomainError
from ..core.matrix_core import kron
from ..states.density_matrix import DensityMatrix

QUTRIT = 3


def generalized_local_kraus(d: int, gamma_local: float):
    """
    Single-party dephasing family of a qudit:
        diag(1, g, ..., g), diag(0, w, 0, ..., 0), ..., diag(0, ..., 0, w)
    with w = sqrt(1 - g^2). The first level is never damped.
    """
    if d < 2:
        raise DomainError(f'Local dimension must be at least 2, got d={d}.')
    if not 0.0 <= gamma_local <= 1.0:
        raise DomainError(f'Local damping factor must lie in [0, 1], got {gamma_local}.')
    omega = np.sqrt(1.0 - gamma_local ** 2)
    first = np.full(d, gamma_local, dtype=np.complex128)
    first[0] = 1.0
    operators = [np.diag(first)]
    for level in range(1, d):
        diag = np.zeros(d, dtype=np.complex128)
        diag[level] = omega
        operators.append(np.diag(diag))
    return operators


def local_kraus_operators(d: int, gamma_a: float, gamma_b: float):
    """ E_i F_j products on d x d, i.e. (K_i (x) I_d)(I_d (x) K_j) for both parties """
    identity = np.eye(d, dtype=np.complex128)
    e_ops = [kron(k, identity) for k in generalized_local_kraus(d, gamma_a)]
    f_ops = [kron(identity, k) for k in generalized_local_kraus(d, gamma_b)]
    return [e @ f for e in e_ops for f in f_ops]


def collective_kraus_operators(profile: DampingProfile):
    " D_1, D_2, D_3 of the shared field; the damped levels are |2,2>, |1,1>, |0,0> "
    g, w1, w2, w3 = profile.gamma, profile.omega1, profile.omega2, profile.omega3
    return [np.diag(np.array([g, 1, 1, 1, g, 1, 1, 1, g], dtype=np.complex128)),
            np.diag(np.array([w1, 0, 0, 0, w2, 0, 0, 0, w2], dtype=np.complex128)),
            np.diag(np.array([0, 0, 0, 0, w3, 0, 0, 0, w3], dtype=np.complex128))]


def kraus_operators(profile: DampingProfile):
    """
    The 27 operators G_n = E_i F_j D_k of the global (multi-local + collective) channel,
    ordered with k running fastest: G_1 = E_1 F_1 D_1, G_2 = E_1 F_1 D_2, ..., G_27 = E_3 F_3 D_3
    """
    identity = np.eye(QUTRIT, dtype=np.complex128)
    e_ops = [kron(k, identity) for k in generalized_local_kraus(QUTRIT, profile.gamma_a)]
    f_ops = [kron(identity, k) for k in generalized_local_kraus(QUTRIT, profile.gamma_b)]
    d_ops = collective_kraus_operators(profile)
    return [e @ f @ d for e in e_ops for f in f_ops for d in d_ops]


def operator_sum(rho, operators):
    " sum_n K_n^H rho K_n "
    stack = np.asarray(operators, dtype=np.complex128)
    return (stack.conj().transpose(0, 2, 1) @ rho @ stack).sum(axis=0)


def completeness(operators):
    " sum_n K_n^H K_n, the identity for a trace-preserving channel "
    stack = np.asarray(operators, dtype=np.complex128)
    return np.einsum('nji,njk->ik', stack.conj(), stack)


def apply_channel(rho0: DensityMatrix, profile: DampingProfile) -> DensityMatrix:
    """ Evolve a two-qutrit state through the 27-operator global dephasing channel """
    if rho0.dims != (QUTRIT, QUTRIT):
        raise DimensionError(f'The global channel acts on 3x3 states, got dims {rho0.dims}.')
    evolved = operator_sum(rho0.matrix, kraus_operators(profile))
    return rho0.evolved(evolved)


def apply_local_channel(rho0: DensityMatrix, gamma_a: float, gamma_b: float) -> DensityMatrix:
    """ Multi-local dephasing of a d x d state, sum_ij F_j^H E_i^H rho E_i F_j """
    d = rho0.dim_a
    if rho0.dim_b != d:
        raise DimensionError(f'The local channel expects equal subsystem dimensions, got {rho0.dims}.')
    evolved = operator_sum(rho0.matrix, local_kraus_operators(d, gamma_a, gamma_b))
    return rho0.evolved(evolved)
