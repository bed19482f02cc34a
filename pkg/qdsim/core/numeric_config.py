from dataclasses import dataclass


@dataclass(frozen=True)
class NumericConfig:
    """
    Numeric constants shared by every kernel and test.

    hermitian_tol:      max |m - m^H| accepted as Hermitian
    trace_tol:          max |tr(rho) - 1| of a density matrix
    positivity_tol:     most negative eigenvalue accepted for a density matrix
    ppt_tol:            most negative PT eigenvalue still counted as PPT
    jacobi_tol:         off-diagonal Frobenius norm ending the Jacobi sweeps
    jacobi_max_sweeps:  hard cap on Jacobi sweeps
    singular_clamp:     tiny negative singular values above -clamp are set to zero
    block_weight_floor: 2x2 blocks lighter than this are reported degenerate
    """
    hermitian_tol: float = 1e-10
    trace_tol: float = 1e-10
    positivity_tol: float = 1e-10
    ppt_tol: float = 1e-10
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100
    singular_clamp: float = 1e-12
    block_weight_floor: float = 1e-14


TOLERANCES = NumericConfig()
