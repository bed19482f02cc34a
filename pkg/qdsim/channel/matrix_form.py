"""
Closed elementwise form of the global dephasing channel.

Basis order: |2,2>, |2,1>, |2,0>, |1,2>, |1,1>, |1,0>, |0,2>, |0,1>, |0,0>.
Entry (m, n) of rho(t) is rho_mn(0) * gamma_a**A[m, n] * gamma_b**B[m, n] * gamma**G[m, n].
The three exponent grids are written out entry by entry rather than derived,
so the Kraus sum in kraus.py is an independent check on them.
"""
import numpy as np
from .damping import DampingProfile
from ..core.errors import DimensionError
from ..states.density_matrix import DensityMatrix

# powers of gamma_a
POW_GAMMA_A = np.array([
    [0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 2, 2, 2],
    [1, 1, 1, 0, 0, 0, 2, 2, 2],
    [1, 1, 1, 0, 0, 0, 2, 2, 2],
    [1, 1, 1, 2, 2, 2, 0, 0, 0],
    [1, 1, 1, 2, 2, 2, 0, 0, 0],
    [1, 1, 1, 2, 2, 2, 0, 0, 0]])

# powers of gamma_b
POW_GAMMA_B = np.array([
    [0, 1, 1, 0, 1, 1, 0, 1, 1],
    [1, 0, 2, 1, 0, 2, 1, 0, 2],
    [1, 2, 0, 1, 2, 0, 1, 2, 0],
    [0, 1, 1, 0, 1, 1, 0, 1, 1],
    [1, 0, 2, 1, 0, 2, 1, 0, 2],
    [1, 2, 0, 1, 2, 0, 1, 2, 0],
    [0, 1, 1, 0, 1, 1, 0, 1, 1],
    [1, 0, 2, 1, 0, 2, 1, 0, 2],
    [1, 2, 0, 1, 2, 0, 1, 2, 0]])

# powers of the collective gamma
POW_GAMMA = np.array([
    [0, 1, 1, 1, 4, 1, 1, 1, 4],
    [1, 0, 0, 0, 1, 0, 0, 0, 1],
    [1, 0, 0, 0, 1, 0, 0, 0, 1],
    [1, 0, 0, 0, 1, 0, 0, 0, 1],
    [4, 1, 1, 1, 0, 1, 1, 1, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 1],
    [1, 0, 0, 0, 1, 0, 0, 0, 1],
    [1, 0, 0, 0, 1, 0, 0, 0, 1],
    [4, 1, 1, 1, 0, 1, 1, 1, 0]])


def damping_factors(profile: DampingProfile):
    " 9x9 grid of the multiplicative factors applied to each density-matrix entry "
    return (profile.gamma_a ** POW_GAMMA_A *
            profile.gamma_b ** POW_GAMMA_B *
            profile.gamma ** POW_GAMMA)


def damping_matrix_map(rho0: DensityMatrix, profile: DampingProfile) -> DensityMatrix:
    """ Evolve a two-qutrit state by multiplying every entry with its damping factor """
    if rho0.dims != (3, 3):
        raise DimensionError(f'The matrix form acts on 3x3 states, got dims {rho0.dims}.')
    return rho0.evolved(rho0.matrix * damping_factors(profile))
