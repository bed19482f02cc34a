import logging
import numpy as np
from scipy.optimize import bisect
from ..core.errors import BracketError

logger = logging.getLogger(__name__)


def find_crossing(f, lo: float, hi: float, tol: float = 1e-9, max_iter: int = 200):
    """
    Zero of a scalar function of time by bisection.
    f(lo) and f(hi) must differ in sign; stops once the bracket is narrower than tol.
    """
    if not tol > 0:
        raise ValueError(f'Bisection tolerance must be positive, got {tol}.')
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return float(lo)
    if f_hi == 0:
        return float(hi)
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(f'No sign change on [{lo}, {hi}]: f(lo)={f_lo:.3e}, f(hi)={f_hi:.3e}.')
    root = bisect(f, lo, hi, xtol=tol, maxiter=max_iter)
    logger.debug('bisection root %.12g on [%g, %g]', root, lo, hi)
    return float(root)


def scan_grid(start: float, stop: float, step: float):
    " Points from start to stop with the given step; stop is always the last point "
    n = int(np.floor((stop - start) / step))
    grid = start + step * np.arange(n + 1)
    if grid[-1] < stop:
        grid = np.append(grid, stop)
    return grid


def last_falling_edge(values):
    """
    Index i of the last transition values[i] > 0 -> values[i + 1] <= 0, or None.
    """
    positive = np.asarray(values) > 0
    edges = np.flatnonzero(positive[:-1] & ~positive[1:])
    return int(edges[-1]) if edges.size else None


def last_rising_edge(values):
    """
    Index i of the last transition values[i] < 0 -> values[i + 1] >= 0, or None.
    """
    negative = np.asarray(values) < 0
    edges = np.flatnonzero(negative[:-1] & ~negative[1:])
    return int(edges[-1]) if edges.size else None
