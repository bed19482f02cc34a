"""
Regime classification of entanglement trajectories:
    NoEsd       negativity survives at every finite time
    EsdOnly     negativity dies at t_N and no CCNR-certified PPT entanglement follows
    DsdWindow   the state turns PPT at t_N yet CCNR certifies entanglement up to t_R
    Undetermined a crossing could not be located
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from .crossing import find_crossing, last_falling_edge, last_rising_edge, scan_grid
from .reference_values import check_reference
from .scenario import DEFAULT_SCAN, ScanConfig, Scenario
from .trajectory import evolve
from ..core.errors import BracketError
from ..measures.entanglement import ccnr, is_ppt, min_pt_eigenvalue
from ..oracle.closed_form import RATE_TABLE, crossing_time_closed_form
from ..states.density_matrix import DensityMatrix
from ..states.families import StateFamily, build_state, initial_classification

logger = logging.getLogger(__name__)


class Regime(str, Enum):
    NO_ESD = 'NoEsd'
    ESD_ONLY = 'EsdOnly'
    DSD_WINDOW = 'DsdWindow'
    UNDETERMINED = 'Undetermined'


@dataclass
class RegimeReport:
    """
    regime: classification label
    t_n: Gamma t at which negativity reaches zero
    t_r: Gamma t at which the CCNR value returns to <= 0
    post_window: label of the PPT region after the certified window
                 ('Undetermined' when CCNR no longer detects, 'separable' when known)
    """
    regime: Regime
    t_n: float | None = None
    t_r: float | None = None
    post_window: str | None = None
    notes: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def bound_window(self):
        if self.regime is Regime.DSD_WINDOW:
            return (self.t_n, self.t_r)
        return None


def _min_pt(rho0, scenario):
    return lambda gt: min_pt_eigenvalue(evolve(rho0, scenario, gt))


def _ccnr_value(rho0, scenario):
    return lambda gt: ccnr(evolve(rho0, scenario, gt)).value


def numeric_esd_time(rho0: DensityMatrix, scenario: Scenario, scan: ScanConfig = DEFAULT_SCAN):
    """
    Gamma t where the smallest PT eigenvalue last changes sign from negative to non-negative,
    found by a coarse scan and bisection. None when it is still negative at the scan horizon.
    The PPT tolerance plays no part here; it only affects labels.
    """
    f = _min_pt(rho0, scenario)
    grid = scan_grid(0.0, scan.horizon, scan.scan_step)
    values = [f(gt) for gt in grid]
    if values[-1] < 0:
        return None
    edge = last_rising_edge(values)
    if edge is None:
        return None
    return find_crossing(f, grid[edge], grid[edge + 1], scan.refine_tol, scan.max_iter)


def esd_time(rho0: DensityMatrix, scenario: Scenario, scan: ScanConfig = DEFAULT_SCAN):
    """ t_N from the closed form for tagged family states, numerically otherwise """
    if rho0.family is not None and StateFamily(rho0.family) in RATE_TABLE:
        return crossing_time_closed_form(rho0.family, rho0.param, scenario.decoherence, scenario.mode)
    return numeric_esd_time(rho0, scenario, scan)


def _static_notes(rho0: DensityMatrix):
    if rho0.family is None or StateFamily(rho0.family) not in RATE_TABLE:
        return []
    return [f'state is {initial_classification(rho0.family, rho0.param)} at t=0']


def bound_window(rho0: DensityMatrix, scenario: Scenario, scan: ScanConfig = DEFAULT_SCAN) -> RegimeReport:
    """
    Locate t_N (negativity loss) and the end t_R of the CCNR-certified PPT window after it.
    t_R is the last falling zero of the CCNR value on [t_N, horizon], bracketed on the scan
    grid and refined by bisection.
    """
    notes = _static_notes(rho0)
    if is_ppt(rho0):
        notes.insert(0, 'state is PPT at t=0')
        logger.info('initial state is PPT, no sudden death of distillable entanglement')
        return RegimeReport(Regime.NO_ESD, notes=notes)

    try:
        t_n = esd_time(rho0, scenario, scan)
    except BracketError as err:
        logger.warning('t_N bracketing failed: %s', err)
        return RegimeReport(Regime.UNDETERMINED, notes=notes + [f'diagnostic: {err}'])
    if t_n is None:
        notes.append('negativity never reaches zero at finite time')
        return _checked(RegimeReport(Regime.NO_ESD, notes=notes), rho0, scenario)
    logger.info('t_N = %.6f (%s)', t_n, scenario.mode.value)

    f = _ccnr_value(rho0, scenario)
    if t_n >= scan.horizon:
        notes.append(f'diagnostic: t_N beyond the scan horizon {scan.horizon}')
        return RegimeReport(Regime.UNDETERMINED, t_n=t_n, notes=notes)
    grid = scan_grid(t_n, scan.horizon, scan.scan_step)
    values = [f(gt) for gt in grid]
    if values[-1] > 0:
        notes.append(f'diagnostic: CCNR still positive at the scan horizon {scan.horizon}')
        return _checked(RegimeReport(Regime.UNDETERMINED, t_n=t_n, notes=notes), rho0, scenario)
    edge = last_falling_edge(values)
    if edge is None:
        report = RegimeReport(Regime.ESD_ONLY, t_n=t_n, post_window=_post_window_label(rho0), notes=notes)
        return _checked(report, rho0, scenario)
    try:
        t_r = find_crossing(f, grid[edge], grid[edge + 1], scan.refine_tol, scan.max_iter)
    except BracketError as err:
        logger.warning('t_R bracketing failed: %s', err)
        return RegimeReport(Regime.UNDETERMINED, t_n=t_n, notes=notes + [f'diagnostic: {err}'])
    logger.info('t_R = %.6f (%s)', t_r, scenario.mode.value)

    midpoint = evolve(rho0, scenario, 0.5 * (t_n + t_r))
    if not (is_ppt(midpoint) and ccnr(midpoint).value > 0):
        notes.append('diagnostic: window midpoint is not a CCNR-detected PPT state')
        return _checked(RegimeReport(Regime.UNDETERMINED, t_n=t_n, t_r=t_r, notes=notes), rho0, scenario)
    if values[0] <= 0:
        notes.append('CCNR is not positive at t_N; the certified window starts later')
    report = RegimeReport(Regime.DSD_WINDOW, t_n=t_n, t_r=t_r, post_window='Undetermined', notes=notes)
    return _checked(report, rho0, scenario)


def _post_window_label(rho0: DensityMatrix):
    if rho0.family is not None and StateFamily(rho0.family) is StateFamily.ISOTROPIC:
        return 'separable'
    return 'Undetermined'


def _checked(report: RegimeReport, rho0: DensityMatrix, scenario: Scenario):
    if rho0.family is not None:
        check_reference(report, rho0.family, rho0.param, scenario)
    return report


def classify_regime(family, param: float, scenario: Scenario, scan: ScanConfig = DEFAULT_SCAN) -> RegimeReport:
    """
    Regime of a family state. Isotropic PPT states are separable, so an isotropic
    trajectory is EsdOnly as soon as t_N exists; the other families go through bound_window.
    """
    family = StateFamily(family)
    rho0 = build_state(family, param)
    if family is not StateFamily.ISOTROPIC:
        return bound_window(rho0, scenario, scan)
    notes = _static_notes(rho0)
    if is_ppt(rho0):
        return RegimeReport(Regime.NO_ESD, notes=['state is PPT at t=0'] + notes)
    t_n = crossing_time_closed_form(family, param, scenario.decoherence, scenario.mode)
    if t_n is None:
        return RegimeReport(Regime.NO_ESD, notes=notes + ['negativity never reaches zero at finite time'])
    notes.append('PPT region of isotropic states is separable')
    return RegimeReport(Regime.ESD_ONLY, t_n=t_n, post_window='separable', notes=notes)
