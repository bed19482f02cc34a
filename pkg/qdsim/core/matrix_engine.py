import numpy as np
from numba import njit, int64, float64, complex128


@njit(float64(complex128[:, :]), cache=True, nogil=True)
def off_diagonal_norm(a):
    """ Frobenius norm of the strictly off-diagonal part """
    n = a.shape[0]
    total = 0.0
    for p in range(n):
        for q in range(n):
            if p != q:
                total += a[p, q].real ** 2 + a[p, q].imag ** 2
    return np.sqrt(total)


@njit(float64[:](complex128[:, :], float64, int64), cache=True, nogil=True)
def jacobi_eigenvalues(m, tol, max_sweeps):
    """
    Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations (ascending)

    Each (p, q) step first removes the phase of a[p, q] with a diagonal unitary
    acting on index q, then applies the real symmetric Jacobi rotation.
    m: Hermitian matrix (left untouched)
    tol: off-diagonal Frobenius norm at which the sweeps stop
    max_sweeps: upper bound on the number of full sweeps
    """
    a = m.copy()
    n = a.shape[0]
    for _ in range(max_sweeps):
        if off_diagonal_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(a[p, q])
                if r == 0.0:
                    continue
                phase = a[p, q] / r
                for k in range(n):
                    a[k, q] *= np.conj(phase)
                for k in range(n):
                    a[q, k] *= phase
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
    eigenvalues = np.empty(n)
    for i in range(n):
        eigenvalues[i] = a[i, i].real
    return np.sort(eigenvalues)


@njit(complex128[:, :](complex128[:, :]), cache=True, nogil=True)
def jordan_wielandt(m):
    """
    Hermitian embedding [[0, m], [m^H, 0]] whose eigenvalues are +/- the singular values of m
    """
    rows, cols = m.shape
    h = np.zeros((rows + cols, rows + cols), dtype=np.complex128)
    for i in range(rows):
        for j in range(cols):
            h[i, rows + j] = m[i, j]
            h[rows + j, i] = np.conj(m[i, j])
    return h
