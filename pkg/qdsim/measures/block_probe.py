"""
Two-qubit block probe of a two-qutrit state: three 2x2 product subspaces are cut
out, renormalized and tested for NPT. An NPT block certifies that the parent
state is distillable.
"""
import numpy as np
from dataclasses import dataclass
from .entanglement import min_pt_eigenvalue
from ..core.errors import DimensionError
from ..core.numeric_config import TOLERANCES
from ..states.density_matrix import DensityMatrix
from ..states.families import basis_index

# each quadruple is ordered (a0 b0, a0 b1, a1 b0, a1 b1) so the block is a 2 x 2 product space
BLOCK_KETS = (
    ((1, 1), (1, 0), (0, 1), (0, 0)),
    ((2, 2), (2, 1), (0, 2), (0, 1)),
    ((2, 2), (2, 0), (1, 2), (1, 0)),
    )


@dataclass(frozen=True)
class BlockReport:
    """
    block_label: the four kets spanning the block, e.g. '|1,1>,|1,0>,|0,1>,|0,0>'
    block_state: renormalized 2x2 state, None when the block is degenerate
    is_npt: the block has a negative partial transpose
    block_weight: trace of the block before renormalization
    degenerate: block_weight below the floor, no test performed
    """
    block_label: str
    block_state: DensityMatrix | None
    is_npt: bool
    block_weight: float
    degenerate: bool = False


def block_label(kets):
    return ','.join(f'|{a},{b}>' for a, b in kets)


def extract_block(rho: DensityMatrix, kets):
    " 4x4 principal submatrix on the given kets "
    indices = [basis_index(a, b) for a, b in kets]
    return rho.matrix[np.ix_(indices, indices)]


def two_qubit_blocks(rho: DensityMatrix, tol: float = TOLERANCES.ppt_tol):
    """
    Reports for the three 2x2 blocks of a two-qutrit state.
    The renormalized block is not re-validated; NPT is judged on the unnormalized block against tol.
    """
    if rho.dims != (3, 3):
        raise DimensionError(f'The block probe needs a 3x3 state, got dims {rho.dims}.')
    reports = []
    for kets in BLOCK_KETS:
        block = extract_block(rho, kets)
        weight = float(np.trace(block).real)
        label = block_label(kets)
        if weight < TOLERANCES.block_weight_floor:
            reports.append(BlockReport(label, None, False, weight, degenerate=True))
            continue
        is_npt = min_pt_eigenvalue(DensityMatrix(block, 2, 2, validate=False)) < -tol
        block_state = DensityMatrix(block / weight, 2, 2, validate=False)
        reports.append(BlockReport(label, block_state, is_npt, weight))
    return reports


def is_block_distillable(rho: DensityMatrix):
    " True when any 2x2 block is NPT "
    return any(report.is_npt for report in two_qubit_blocks(rho))
