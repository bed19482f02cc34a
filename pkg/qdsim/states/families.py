"""
The qutrit state families: maximally entangled, Horodecki alpha-family, its locally
rotated sibling and isotropic states.

Kets |2>, |1>, |0> sit at matrix indices 0, 1, 2, so |a, b> of a d x d system is
index d * (d - 1 - a) + (d - 1 - b) and |2,2> comes first.
"""
import numpy as np
from dataclasses import dataclass
from enum import Enum
from .density_matrix import DensityMatrix
from ..core.errors import DomainError
from ..core.matrix_core import kron


class StateFamily(str, Enum):
    HORODECKI = 'horodecki'
    ROTATED = 'rotated'
    ISOTROPIC = 'isotropic'
    RAW = 'raw'


@dataclass(frozen=True)
class HorodeckiParams:
    """ alpha in [2, 5]: separable up to 3, bound entangled up to 4, free entangled above """
    alpha: float

    def __post_init__(self):
        if not 2.0 <= self.alpha <= 5.0:
            raise DomainError(f'alpha must lie in [2, 5], got {self.alpha}.')

    @property
    def in_range(self):
        return 2.0 <= self.alpha <= 5.0

    @classmethod
    def unchecked(cls, alpha: float) -> 'HorodeckiParams':
        """
        Skip the range check, for exploration outside [2, 5]. States built from
        out-of-range parameters are untagged and still must be positive semidefinite.
        """
        params = object.__new__(cls)
        object.__setattr__(params, 'alpha', alpha)
        return params


@dataclass(frozen=True)
class IsotropicParams:
    """ Singlet fraction weight p in [0, 1] """
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise DomainError(f'p must lie in [0, 1], got {self.p}.')

    @property
    def in_range(self):
        return 0.0 <= self.p <= 1.0

    @classmethod
    def unchecked(cls, p: float) -> 'IsotropicParams':
        """ Skip the range check; see HorodeckiParams.unchecked """
        params = object.__new__(cls)
        object.__setattr__(params, 'p', p)
        return params


def level_index(level: int, d: int = 3):
    " Matrix index of the single-party ket |level> "
    if not 0 <= level < d:
        raise DomainError(f'Level {level} does not exist for d={d}.')
    return d - 1 - level


def basis_index(a: int, b: int, d: int = 3):
    " Matrix index of the product ket |a, b> "
    return d * level_index(a, d) + level_index(b, d)


def ket(a: int, b: int, d: int = 3):
    " Product basis vector |a, b> "
    vec = np.zeros(d * d, dtype=np.complex128)
    vec[basis_index(a, b, d)] = 1.0
    return vec


def projector(vec):
    " |v><v| "
    vec = np.asarray(vec, dtype=np.complex128)
    return np.outer(vec, vec.conj())


def max_entangled_vector(d: int = 3):
    " (1/sqrt(d)) sum_k |k, k> "
    return sum(ket(k, k, d) for k in range(d)) / np.sqrt(d)


def max_entangled(d: int = 3) -> DensityMatrix:
    """ Projector onto the maximally entangled state of two qudits """
    if d < 2:
        raise DomainError(f'Dimension must be at least 2, got d={d}.')
    return DensityMatrix(projector(max_entangled_vector(d)), d, d)


def sigma_plus():
    " (|0,1><0,1| + |1,2><1,2| + |2,0><2,0|) / 3 "
    return sum(projector(ket(a, b)) for a, b in ((0, 1), (1, 2), (2, 0))) / 3.0


def sigma_minus():
    " (|1,0><1,0| + |2,1><2,1| + |0,2><0,2|) / 3 "
    return sum(projector(ket(a, b)) for a, b in ((1, 0), (2, 1), (0, 2))) / 3.0


def horodecki_matrix(alpha: float):
    " (2/7)|Psi+><Psi+| + (alpha/7) sigma_+ + ((5 - alpha)/7) sigma_- "
    return (2.0 / 7.0 * projector(max_entangled_vector(3)) +
            alpha / 7.0 * sigma_plus() + (5.0 - alpha) / 7.0 * sigma_minus())


def horodecki_state(params: HorodeckiParams) -> DensityMatrix:
    """ Horodecki alpha-family state """
    return DensityMatrix(horodecki_matrix(params.alpha), 3, 3,
                         family=StateFamily.HORODECKI if params.in_range else None, param=params.alpha)


def theta_unitary():
    " |0><1| + |1><0| + |2><2| on one qutrit "
    theta = np.zeros((3, 3), dtype=np.complex128)
    for out_level, in_level in ((0, 1), (1, 0), (2, 2)):
        theta[level_index(out_level), level_index(in_level)] = 1.0
    return theta


def local_rotation():
    " U = I_3 (x) theta "
    return kron(np.eye(3), theta_unitary())


def rotated_state(params: HorodeckiParams) -> DensityMatrix:
    """ U rho_alpha U^H with U = I_3 (x) theta; same spectrum and PT spectrum as rho_alpha """
    u = local_rotation()
    return DensityMatrix(u @ horodecki_matrix(params.alpha) @ u.conj().T, 3, 3,
                         family=StateFamily.ROTATED if params.in_range else None, param=params.alpha)


def isotropic_state(params: IsotropicParams, dim: int = 3) -> DensityMatrix:
    """ p |Psi+><Psi+| + (1 - p) I / d^2 """
    if dim < 2:
        raise DomainError(f'Dimension must be at least 2, got dim={dim}.')
    matrix = (params.p * projector(max_entangled_vector(dim)) +
              (1.0 - params.p) / dim ** 2 * np.eye(dim * dim))
    return DensityMatrix(matrix, dim, dim,
                         family=StateFamily.ISOTROPIC if dim == 3 and params.in_range else None, param=params.p)


def build_state(family, param: float) -> DensityMatrix:
    """ Construct a tagged state from a family name and its parameter """
    family = StateFamily(family)
    if family is StateFamily.HORODECKI:
        return horodecki_state(HorodeckiParams(param))
    if family is StateFamily.ROTATED:
        return rotated_state(HorodeckiParams(param))
    if family is StateFamily.ISOTROPIC:
        return isotropic_state(IsotropicParams(param))
    raise DomainError('Raw states are loaded from file, not constructed.')


def initial_classification(family, param: float):
    """
    Static entanglement class at t = 0: 'separable', 'bound' or 'free'.
    Horodecki and rotated states share the alpha ranges; isotropic PPT states are separable.
    """
    family = StateFamily(family)
    if family in (StateFamily.HORODECKI, StateFamily.ROTATED):
        if param <= 3.0:
            return 'separable'
        return 'bound' if param <= 4.0 else 'free'
    if family is StateFamily.ISOTROPIC:
        return 'separable' if param <= 0.25 else 'free'
    raise DomainError('No static classification for raw states.')
