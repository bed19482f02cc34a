import logging
import os
import numpy as np
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from .scenario import Scenario
from ..channel.kraus import apply_channel
from ..core.errors import DomainError
from ..core.numeric_config import TOLERANCES
from ..measures.entanglement import ccnr, negativity_from_spectrum, pt_eigenvalues
from ..states.density_matrix import DensityMatrix

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('gamma_t', 'negativity', 'ccnr_value', 'min_pt_eigenvalue')


@dataclass(frozen=True)
class SweepRecord:
    gamma_t: float
    negativity: float
    ccnr_value: float
    min_pt_eigenvalue: float


def evolve(rho0: DensityMatrix, scenario: Scenario, gamma_t: float) -> DensityMatrix:
    " State at the dimensionless time Gamma t "
    return apply_channel(rho0, scenario.profile(gamma_t))


def evaluate_point(rho0: DensityMatrix, scenario: Scenario, gamma_t: float) -> SweepRecord:
    """ Negativity, CCNR value and smallest PT eigenvalue of the evolved state """
    state = evolve(rho0, scenario, gamma_t)
    spectrum = pt_eigenvalues(state)
    return SweepRecord(gamma_t=float(gamma_t),
                       negativity=negativity_from_spectrum(spectrum, TOLERANCES.ppt_tol),
                       ccnr_value=ccnr(state).value,
                       min_pt_eigenvalue=float(spectrum[0]))


def check_grid(grid):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError('The time grid must be a non-empty 1d sequence.')
    if grid[0] < 0 or np.any(np.diff(grid) <= 0):
        raise DomainError('The time grid must be non-negative and strictly increasing.')
    return grid


class Trajectory:
    """
    Entanglement trajectory of an initial state under a dephasing scenario,
    sampled on a Gamma t grid. Quantities are evaluated on first access.
    """
    def __init__(self, rho0: DensityMatrix, scenario: Scenario, grid, workers: int = 1):
        """
        rho0: initial two-qutrit state
        scenario: noise mode and rates
        grid: strictly increasing, non-negative Gamma t values
        workers: grid points evaluated concurrently (1 = sequential)
        """
        self.rho0 = rho0
        self.scenario = scenario
        self.gamma_t = check_grid(grid)
        self.workers = max(1, int(workers))
        self._records = None
        self._reset_cache()

    def _reset_cache(self):
        self._negativity = None
        self._ccnr_value = None
        self._min_pt_eigenvalue = None

    @property
    def records(self):
        if self._records is None:
            logger.debug('sweeping %d grid points (%s)', self.gamma_t.size, self.scenario.mode.value)
            if self.workers > 1:
                with ThreadPoolExecutor(max_workers=self.workers) as pool:
                    self._records = list(pool.map(lambda gt: evaluate_point(self.rho0, self.scenario, gt),
                                                  self.gamma_t))
            else:
                self._records = [evaluate_point(self.rho0, self.scenario, gt) for gt in self.gamma_t]
            self._reset_cache()
        return self._records

    @property
    def negativity(self):
        if self._negativity is None:
            self._negativity = np.array([r.negativity for r in self.records])
        return self._negativity

    @property
    def ccnr_value(self):
        if self._ccnr_value is None:
            self._ccnr_value = np.array([r.ccnr_value for r in self.records])
        return self._ccnr_value

    @property
    def min_pt_eigenvalue(self):
        if self._min_pt_eigenvalue is None:
            self._min_pt_eigenvalue = np.array([r.min_pt_eigenvalue for r in self.records])
        return self._min_pt_eigenvalue

    def state_at(self, gamma_t: float) -> DensityMatrix:
        return evolve(self.rho0, self.scenario, gamma_t)

    def save_csv(self, target, comments=()):
        """
        Write the sweep as CSV: '#' comment lines, the column header, one row per grid point.
        target: file name or an open text stream
        """
        data = np.column_stack((self.gamma_t, self.negativity, self.ccnr_value, self.min_pt_eigenvalue))
        if isinstance(target, (str, os.PathLike)):
            with open(target, 'w', newline='') as stream:
                self._write_csv(stream, data, comments)
        else:
            self._write_csv(target, data, comments)
        return self

    @staticmethod
    def _write_csv(stream, data, comments):
        for line in comments:
            stream.write(f'# {line}\n')
        np.savetxt(stream, data, fmt='%.12g', delimiter=',', header=','.join(CSV_COLUMNS), comments='')


def sweep(rho0: DensityMatrix, scenario: Scenario, grid, workers: int = 1):
    """ One SweepRecord per grid point """
    return Trajectory(rho0, scenario, grid, workers=workers).records
