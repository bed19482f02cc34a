import numpy as np
from dataclasses import dataclass
from ..core.errors import DimensionError
from ..core.matrix_core import hermitian_eigenvalues, trace_norm
from ..core.numeric_config import TOLERANCES
from ..states.density_matrix import DensityMatrix


@dataclass(frozen=True)
class CcnrResult:
    """
    Realignment (CCNR) test: value = ||rho^R||_1 - 1.
    value > 0 certifies entanglement; value <= 0 is inconclusive.
    """
    trace_norm: float
    value: float

    @property
    def detects_entanglement(self):
        return self.value > 0.0


def partial_transpose(rho: DensityMatrix):
    """
    Transpose of subsystem B: out[(i, j), (k, l)] = rho[(i, l), (k, j)]
    """
    d_a, d_b = rho.dims
    return rho.tensor.transpose(0, 3, 2, 1).reshape(d_a * d_b, d_a * d_b).copy()


def pt_eigenvalues(rho: DensityMatrix):
    " Ascending spectrum of the partial transpose "
    return hermitian_eigenvalues(partial_transpose(rho))


def min_pt_eigenvalue(rho: DensityMatrix):
    " Smallest partial-transpose eigenvalue "
    return float(pt_eigenvalues(rho)[0])


def negativity_from_spectrum(spectrum, tol: float = TOLERANCES.ppt_tol):
    " Sum of |lambda| over eigenvalues below -tol "
    spectrum = np.asarray(spectrum)
    return float(-np.sum(spectrum[spectrum < -tol]))


def negativity(rho: DensityMatrix, tol: float = TOLERANCES.ppt_tol):
    """
    Negativity: sum of the absolute negative PT eigenvalues, (||rho^T_B||_1 - 1) / 2.
    Eigenvalues within tol of zero count as non-negative, so negativity is 0 exactly when is_ppt.
    """
    return negativity_from_spectrum(pt_eigenvalues(rho), tol)


def is_ppt(rho: DensityMatrix, tol: float = TOLERANCES.ppt_tol):
    """ True when the smallest PT eigenvalue is at least -tol """
    return min_pt_eigenvalue(rho) >= -tol


def realign(rho: DensityMatrix):
    """
    Realigned matrix (rho^R)[(i, j), (k, l)] = rho[(i, k), (j, l)] for a d x d state
    """
    d_a, d_b = rho.dims
    if d_a != d_b:
        raise DimensionError(f'Realignment needs equal subsystem dimensions, got {rho.dims}.')
    return rho.tensor.transpose(0, 2, 1, 3).reshape(d_a * d_a, d_b * d_b).copy()


def ccnr(rho: DensityMatrix) -> CcnrResult:
    """ Computable cross norm / realignment test """
    norm = trace_norm(realign(rho))
    return CcnrResult(trace_norm=norm, value=norm - 1.0)
