"""
Crossing times quoted alongside the published negativity/CCNR curves (alpha = 4.3,
G1 = G2 = G). Computed reports are compared against them; a deviation is kept as a
warning on the report instead of overriding the computed value.
"""
import logging
import warnings
from dataclasses import dataclass
from .scenario import Scenario, ScenarioMode
from ..core.errors import ReferenceDiscrepancyWarning
from ..states.families import StateFamily

logger = logging.getLogger(__name__)

REFERENCE_TOL = 0.002


@dataclass(frozen=True)
class ReferenceValue:
    family: StateFamily
    param: float
    mode: ScenarioMode
    quantity: str  # 't_n' or 't_r'
    value: float


REFERENCE_VALUES = (
    # the global t_n of 0.1422 repeats the multi-local value; the closed form gives 0.0711
    ReferenceValue(StateFamily.HORODECKI, 4.3, ScenarioMode.GLOBAL, 't_n', 0.1422),
    ReferenceValue(StateFamily.HORODECKI, 4.3, ScenarioMode.GLOBAL, 't_r', 0.1764),
    ReferenceValue(StateFamily.HORODECKI, 4.3, ScenarioMode.MULTI_LOCAL, 't_n', 0.1422),
    ReferenceValue(StateFamily.HORODECKI, 4.3, ScenarioMode.MULTI_LOCAL, 't_r', 0.3437),
    ReferenceValue(StateFamily.ROTATED, 4.3, ScenarioMode.GLOBAL, 't_n', 0.0948),
    ReferenceValue(StateFamily.ROTATED, 4.3, ScenarioMode.GLOBAL, 't_r', 0.2686),
    ReferenceValue(StateFamily.ROTATED, 4.3, ScenarioMode.MULTI_LOCAL, 't_n', 0.1422),
    ReferenceValue(StateFamily.ROTATED, 4.3, ScenarioMode.MULTI_LOCAL, 't_r', 0.3437),
    )


def matching_references(family, param: float, scenario: Scenario):
    """ Reference entries for this family, parameter and scenario (global needs equal rates) """
    if family is None:
        return []
    family = StateFamily(family)
    rates = scenario.decoherence
    if scenario.mode is ScenarioMode.GLOBAL and rates.gamma1 != rates.gamma2:
        return []
    if scenario.effective.gamma1 == 0:
        return []
    return [ref for ref in REFERENCE_VALUES
            if ref.family is family and ref.mode is scenario.mode and abs(ref.param - param) < 1e-12]


def check_reference(report, family, param: float, scenario: Scenario, tol: float = REFERENCE_TOL):
    """
    Compare a RegimeReport against the reference ledger.
    Each deviation is appended to report.warnings and emitted as a ReferenceDiscrepancyWarning.
    """
    for ref in matching_references(family, param, scenario):
        computed = getattr(report, ref.quantity)
        if computed is not None and abs(computed - ref.value) <= tol:
            continue
        shown = 'none' if computed is None else f'{computed:.4f}'
        message = (f'reference {ref.quantity}={ref.value} for {ref.family.value}({ref.param}) '
                   f'under {ref.mode.value} noise disagrees with the computed {ref.quantity}={shown}')
        logger.warning(message)
        warnings.warn(message, ReferenceDiscrepancyWarning, stacklevel=2)
        report.warnings.append(message)
    return report
