"""
Closed-form candidate negative eigenvalues of the evolved partial transposes, and
their exact zero-crossing times. Independent of the numeric pipeline; used to check it.
"""
import logging
import numpy as np
from dataclasses import dataclass
from ..analysis.scenario import Scenario, ScenarioMode
from ..channel.damping import DampingProfile, DecoherenceParams
from ..core.errors import DomainError
from ..states.families import HorodeckiParams, IsotropicParams, StateFamily

logger = logging.getLogger(__name__)

# Each candidate eigenvalue decays through a single exponential exp(-(a G1 + b G2) t);
# (a, b) per eigenvalue, from gamma_a = gamma_b = exp(-G1 t/2) and gamma = exp(-G2 t/2):
#   horodecki  gamma^8 ga^2 gb^2 -> (2, 4)   ga^4 gb^4 -> (4, 0)
#   rotated    gamma^2 ga^2 gb^2 -> (2, 1)   ga^4 gb^4 -> (4, 0)
#   isotropic  gamma^4 ga gb     -> (1, 2)   ga^2 gb^2 -> (2, 0)
RATE_TABLE = {
    StateFamily.HORODECKI: ((2, 4), (2, 4), (4, 0)),
    StateFamily.ROTATED: ((2, 1), (2, 1), (4, 0)),
    StateFamily.ISOTROPIC: ((1, 2), (1, 2), (2, 0)),
    }


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """ The three candidate negative PT eigenvalues of a family at one profile """
    family: StateFamily
    values: tuple[float, float, float]

    @property
    def negativity(self):
        return float(sum(max(0.0, -value) for value in self.values))


def _alpha_offset(alpha: float):
    HorodeckiParams(alpha)
    return (2.0 * alpha - 5.0) ** 2


def _sqrt_branch(offset: float, damping: float):
    return (5.0 - np.sqrt(16.0 * damping + offset)) / 42.0


def horodecki_pt_eigenvalues(alpha: float, profile: DampingProfile) -> ClosedFormSpectrum:
    """ lambda_1 = lambda_2 = (5 - sqrt(16 g^8 ga^2 gb^2 + (2a-5)^2)) / 42, lambda_3 with ga^4 gb^4 """
    offset = _alpha_offset(alpha)
    ga, gb, g = profile.gamma_a, profile.gamma_b, profile.gamma
    lam12 = _sqrt_branch(offset, g ** 8 * ga ** 2 * gb ** 2)
    lam3 = _sqrt_branch(offset, ga ** 4 * gb ** 4)
    return ClosedFormSpectrum(StateFamily.HORODECKI, (float(lam12), float(lam12), float(lam3)))


def rotated_pt_eigenvalues(alpha: float, profile: DampingProfile) -> ClosedFormSpectrum:
    """ eta_1 = eta_2 = (5 - sqrt((2a-5)^2 + 16 g^2 ga^2 gb^2)) / 42, eta_3 with ga^4 gb^4 """
    offset = _alpha_offset(alpha)
    ga, gb, g = profile.gamma_a, profile.gamma_b, profile.gamma
    eta12 = _sqrt_branch(offset, g ** 2 * ga ** 2 * gb ** 2)
    eta3 = _sqrt_branch(offset, ga ** 4 * gb ** 4)
    return ClosedFormSpectrum(StateFamily.ROTATED, (float(eta12), float(eta12), float(eta3)))


def isotropic_pt_eigenvalues(p: float, profile: DampingProfile) -> ClosedFormSpectrum:
    """ xi_1 = xi_2 = (1 - p - 3p g^4 ga gb) / 9, xi_3 = (1 - p - 3p ga^2 gb^2) / 9 """
    IsotropicParams(p)
    ga, gb, g = profile.gamma_a, profile.gamma_b, profile.gamma
    xi12 = (1.0 - p - 3.0 * p * g ** 4 * ga * gb) / 9.0
    xi3 = (1.0 - p - 3.0 * p * ga ** 2 * gb ** 2) / 9.0
    return ClosedFormSpectrum(StateFamily.ISOTROPIC, (float(xi12), float(xi12), float(xi3)))


def pt_eigenvalues_closed_form(family, param: float, profile: DampingProfile) -> ClosedFormSpectrum:
    family = StateFamily(family)
    if family is StateFamily.HORODECKI:
        return horodecki_pt_eigenvalues(param, profile)
    if family is StateFamily.ROTATED:
        return rotated_pt_eigenvalues(param, profile)
    if family is StateFamily.ISOTROPIC:
        return isotropic_pt_eigenvalues(param, profile)
    raise DomainError(f'No closed form for family {family.value!r}.')


def negativity_closed_form(family, param: float, profile: DampingProfile):
    """ sum of max(0, -value) over the closed-form candidates """
    return pt_eigenvalues_closed_form(family, param, profile).negativity


def _decay_ratio(family: StateFamily, param: float):
    """
    Each candidate vanishes when exp(-r t) equals this ratio (<= 0 or >= 1 means no finite crossing
    from below). Also returns whether the candidate is negative at t = 0.
    """
    if family is StateFamily.ISOTROPIC:
        IsotropicParams(param)
        if param == 0.0:
            return 1.0, False
        # 3 p exp(-r t) = 1 - p
        ratio = (1.0 - param) / (3.0 * param)
        return ratio, ratio < 1.0
    offset = _alpha_offset(param)
    # 16 exp(-r t) = 25 - (2 alpha - 5)^2
    ratio = (25.0 - offset) / 16.0
    return ratio, ratio < 1.0


def eigenvalue_crossing_times(family, param: float, decoherence: DecoherenceParams, mode):
    """
    Gamma t at which each candidate eigenvalue reaches zero: a float, inf when a candidate
    negative at t = 0 stays negative forever, or None when it starts non-negative.
    """
    family = StateFamily(family)
    if family not in RATE_TABLE:
        raise DomainError(f'No closed form for family {family.value!r}.')
    scenario = Scenario(ScenarioMode(mode), decoherence)
    rates = scenario.effective
    ratio, negative_at_start = _decay_ratio(family, param)
    times = []
    for a, b in RATE_TABLE[family]:
        if not negative_at_start:
            times.append(None)
            continue
        rate = (a * rates.gamma1 + b * rates.gamma2) / scenario.rate_scale
        if rate == 0.0 or ratio <= 0.0:
            times.append(np.inf)
        else:
            times.append(float(-np.log(ratio) / rate))
    return times


def crossing_time_closed_form(family, param: float, decoherence: DecoherenceParams, mode):
    """
    ESD time in Gamma t: the largest crossing among the candidates negative at t = 0.
    None when the state is PPT from the start or some candidate never crosses.
    """
    times = [t for t in eigenvalue_crossing_times(family, param, decoherence, mode) if t is not None]
    if not times or np.isinf(max(times)):
        return None
    t_n = max(times)
    logger.debug('closed-form t_N for %s(%s), %s: %.9f', StateFamily(family).value, param,
                 ScenarioMode(mode).value, t_n)
    return t_n
