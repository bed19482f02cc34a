import numpy as np
from dataclasses import dataclass
from ..core.errors import DomainError


@dataclass(frozen=True)
class DecoherenceParams:
    """
    Phase-damping rates (inverse time)
    gamma1: multi-local rate, one independent field per qutrit
    gamma2: collective rate, one field shared by both qutrits
    """
    gamma1: float = 1.0
    gamma2: float = 1.0

    def __post_init__(self):
        if not (self.gamma1 >= 0 and self.gamma2 >= 0):
            raise DomainError(f'Damping rates must be non-negative, got gamma1={self.gamma1}, gamma2={self.gamma2}.')


@dataclass(frozen=True)
class DampingProfile:
    """ Time-evaluated damping factors of the local (A, B) and collective fields """
    gamma_a: float
    gamma_b: float
    gamma: float
    omega_a: float
    omega_b: float
    omega1: float
    omega2: float
    omega3: float

    @classmethod
    def from_factors(cls, gamma_a: float, gamma_b: float, gamma: float) -> 'DampingProfile':
        """ Build the profile from the three decay factors, each in (0, 1] """
        for name, value in (('gamma_a', gamma_a), ('gamma_b', gamma_b), ('gamma', gamma)):
            if not 0.0 <= value <= 1.0:
                raise DomainError(f'{name} must lie in [0, 1], got {value}.')
        g2 = gamma ** 2
        return cls(gamma_a=gamma_a, gamma_b=gamma_b, gamma=gamma,
                   omega_a=np.sqrt(1.0 - gamma_a ** 2),
                   omega_b=np.sqrt(1.0 - gamma_b ** 2),
                   omega1=np.sqrt(1.0 - g2),
                   omega2=-g2 * np.sqrt(1.0 - g2),
                   omega3=(1.0 - g2) * np.sqrt(1.0 + g2))


def decay_factor(rate: float, t: float):
    " exp(-rate * t / 2) "
    return np.exp(-rate * t / 2.0)


def damping_profile(params: DecoherenceParams, t: float) -> DampingProfile:
    """
    Damping factors at time t: gamma_a = gamma_b = exp(-G1 t / 2), gamma = exp(-G2 t / 2)
    """
    if not t >= 0:
        raise DomainError(f'Time must be non-negative, got t={t}.')
    local = float(decay_factor(params.gamma1, t))
    return DampingProfile.from_factors(local, local, float(decay_factor(params.gamma2, t)))
