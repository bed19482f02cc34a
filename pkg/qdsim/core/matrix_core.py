import numpy as np
from . import matrix_engine
from .errors import DimensionError, SymmetryError
from .numeric_config import TOLERANCES


def as_square(m, name: str = 'matrix'):
    """ A C-contiguous complex128 copy of a square 2d input """
    arr = np.ascontiguousarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f'{name} must be a square 2d matrix, got shape {arr.shape}.')
    return arr


def hermitian_deviation(m):
    " Largest elementwise |m - m^H| "
    arr = np.asarray(m)
    return float(np.max(np.abs(arr - arr.conj().T))) if arr.size else 0.0


def hermitian_eigenvalues(m, tol: float = TOLERANCES.hermitian_tol):
    """
    All eigenvalues of a Hermitian matrix in ascending order.
    m: square matrix, Hermitian within tol (max elementwise |m - m^H|)
    """
    arr = as_square(m)
    deviation = hermitian_deviation(arr)
    if deviation > tol:
        raise SymmetryError(f'Matrix is not Hermitian: max |m - m^H| = {deviation:.3e} > {tol:.1e}.')
    # symmetrize so the rotations see an exactly Hermitian matrix
    arr = 0.5 * (arr + arr.conj().T)
    return matrix_engine.jacobi_eigenvalues(arr, TOLERANCES.jacobi_tol, TOLERANCES.jacobi_max_sweeps)


def singular_values(m):
    """
    Singular values in descending order, read off the Jordan-Wielandt embedding
    so small singular values keep full absolute precision.
    """
    arr = as_square(m)
    n = arr.shape[0]
    spectrum = matrix_engine.jacobi_eigenvalues(matrix_engine.jordan_wielandt(arr),
                                                TOLERANCES.jacobi_tol, TOLERANCES.jacobi_max_sweeps)
    sv = spectrum[::-1][:n].copy()
    sv[(sv < 0.0) & (sv > -TOLERANCES.singular_clamp)] = 0.0
    return sv


def trace_norm(m):
    """
    Trace norm (sum of singular values) of a square matrix.
    The embedding spectrum is +/- sigma, so half its absolute sum is exact even for zero sigma.
    """
    arr = as_square(m)
    spectrum = matrix_engine.jacobi_eigenvalues(matrix_engine.jordan_wielandt(arr),
                                                TOLERANCES.jacobi_tol, TOLERANCES.jacobi_max_sweeps)
    return 0.5 * float(np.sum(np.abs(spectrum)))


def kron(a, b):
    " Kronecker product of two 2d matrices "
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionError('kron expects two 2d matrices.')
    return np.kron(a, b)
