import numpy as np
from ..core.errors import DimensionError, DomainError, SymmetryError
from ..core.matrix_core import as_square, hermitian_deviation, hermitian_eigenvalues
from ..core.numeric_config import TOLERANCES


class DensityMatrix:
    """
    Bipartite quantum state on a dim_a x dim_b Hilbert space.

    The matrix is stored read-only; eigenvalues and reduced states are cached.
    family/param tag states built by the family constructors so analysis code
    can reach their closed-form spectra.
    """
    def __init__(self, matrix, dim_a: int = 3, dim_b: int = 3,
                 family=None, param=None, validate: bool = True):
        """
        matrix: (dim_a * dim_b) square complex matrix
        dim_a, dim_b: subsystem dimensions
        family, param: optional tag of the constructing family (e.g. 'horodecki', 4.3)
        validate: check Hermiticity, unit trace and positivity
        """
        arr = as_square(matrix, 'density matrix')
        if arr.shape[0] != dim_a * dim_b:
            raise DimensionError(f'Matrix of size {arr.shape[0]} does not match dims {dim_a}x{dim_b}.')
        arr.setflags(write=False)
        self._matrix = arr
        self._dim_a = int(dim_a)
        self._dim_b = int(dim_b)
        self.family = family
        self.param = param
        self._eigenvalues = None
        self._reduced_a = None
        self._reduced_b = None
        if validate:
            self.validate()

    def validate(self):
        """ Raise unless the matrix is Hermitian, trace one and positive semidefinite """
        deviation = hermitian_deviation(self._matrix)
        if deviation > TOLERANCES.hermitian_tol:
            raise SymmetryError(f'Density matrix is not Hermitian (max deviation {deviation:.3e}).')
        trace = self.trace
        if abs(trace - 1.0) > TOLERANCES.trace_tol:
            raise DomainError(f'Density matrix trace is {trace:.12g}, expected 1.')
        min_eig = self.eigenvalues[0]
        if min_eig < -TOLERANCES.positivity_tol:
            raise DomainError(f'Density matrix is not positive semidefinite (min eigenvalue {min_eig:.3e}).')
        return self

    def evolved(self, matrix) -> 'DensityMatrix':
        """ A new untagged state of the same dimensions """
        return DensityMatrix(matrix, self._dim_a, self._dim_b)

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim_a(self):
        return self._dim_a

    @property
    def dim_b(self):
        return self._dim_b

    @property
    def dims(self):
        return (self._dim_a, self._dim_b)

    @property
    def trace(self):
        return float(np.trace(self._matrix).real)

    @property
    def eigenvalues(self):
        """ Ascending eigenvalues of the state """
        if self._eigenvalues is None:
            self._eigenvalues = hermitian_eigenvalues(self._matrix)
        return self._eigenvalues

    @property
    def purity(self):
        """ tr(rho^2) """
        return float(np.real(np.vdot(self._matrix.conj().T, self._matrix)))

    @property
    def tensor(self):
        " rho reshaped to (dim_a, dim_b, dim_a, dim_b) "
        return self._matrix.reshape(self._dim_a, self._dim_b, self._dim_a, self._dim_b)

    @property
    def reduced_a(self):
        """ Reduced state of party A """
        if self._reduced_a is None:
            self._reduced_a = np.einsum('ijkj->ik', self.tensor)
        return self._reduced_a

    @property
    def reduced_b(self):
        """ Reduced state of party B """
        if self._reduced_b is None:
            self._reduced_b = np.einsum('ijil->jl', self.tensor)
        return self._reduced_b

    def __repr__(self):
        tag = f', family={self.family!r}, param={self.param!r}' if self.family else ''
        return f'DensityMatrix(dims={self.dims}{tag})'
