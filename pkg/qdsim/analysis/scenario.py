from dataclasses import dataclass, field
from enum import Enum
from ..channel.damping import DampingProfile, DecoherenceParams, damping_profile
from ..core.errors import DomainError


class ScenarioMode(str, Enum):
    GLOBAL = 'global'
    MULTI_LOCAL = 'multilocal'
    COLLECTIVE = 'collective'


@dataclass(frozen=True)
class ScanConfig:
    """
    Crossing-scan settings, in units of Gamma t.
    horizon: end of every scan
    scan_step: coarse grid step used to bracket sign changes
    refine_tol: bisection bracket width
    max_iter: bisection iteration cap
    """
    horizon: float = 5.0
    scan_step: float = 0.002
    refine_tol: float = 1e-9
    max_iter: int = 200

    def __post_init__(self):
        if not (self.horizon > 0 and 0 < self.scan_step < self.horizon and self.refine_tol > 0):
            raise DomainError(f'Invalid scan configuration: {self}.')


DEFAULT_SCAN = ScanConfig()


@dataclass(frozen=True)
class Scenario:
    """
    Which noise fields act: global (both), multilocal (gamma = 1) or collective (gamma_a = gamma_b = 1).
    Times are given as Gamma t with Gamma the largest active rate.
    """
    mode: ScenarioMode = ScenarioMode.GLOBAL
    decoherence: DecoherenceParams = field(default_factory=DecoherenceParams)

    def __post_init__(self):
        object.__setattr__(self, 'mode', ScenarioMode(self.mode))

    @property
    def effective(self) -> DecoherenceParams:
        """ Rates with the switched-off field set to zero """
        if self.mode is ScenarioMode.MULTI_LOCAL:
            return DecoherenceParams(self.decoherence.gamma1, 0.0)
        if self.mode is ScenarioMode.COLLECTIVE:
            return DecoherenceParams(0.0, self.decoherence.gamma2)
        return self.decoherence

    @property
    def rate_scale(self):
        """ Gamma = max of the active rates (1 when no field acts) """
        rates = self.effective
        scale = max(rates.gamma1, rates.gamma2)
        return scale if scale > 0 else 1.0

    def physical_time(self, gamma_t: float):
        return gamma_t / self.rate_scale

    def profile(self, gamma_t: float) -> DampingProfile:
        """ Damping profile at the dimensionless time Gamma t """
        if not gamma_t >= 0:
            raise DomainError(f'Gamma t must be non-negative, got {gamma_t}.')
        return damping_profile(self.effective, self.physical_time(gamma_t))
