'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Floating-point least-squares screen of a system before the exact solve.
'''
from typing import NamedTuple

import numpy as np
from loguru import logger
from scipy.sparse.linalg import lsqr

from .linear_system import LinearSystem

DEFAULT_ITER_FACTOR = 10
DEFAULT_NORMAL_TOL = 1e-10

# lsqr stop codes meaning the solution satisfies the tolerances rather than hitting a limit.
_CONVERGED_CODES = (0, 1, 2, 4, 5)


class ScreenResult(NamedTuple):
    residual: float
    iterations: int
    normal_residual: float
    converged: bool

    @property
    def upper_bound(self) -> bool:
        return not self.converged


def least_squares_screen(
        system: LinearSystem,
        iter_factor: int = DEFAULT_ITER_FACTOR,
        tol: float = DEFAULT_NORMAL_TOL,
) -> ScreenResult:
    """
    Approximate ``min ||V x - rhs||`` with LSQR. The budget is ``iter_factor * (rows + cols)`` iterations; a run that
    exhausts it still reports its residual, flagged as not converged.

    :Arguments:
        - system (LinearSystem): Assembled system.
        - iter_factor (int, optional): Iterations per row and column. Defaults to 10.
        - tol (float, optional): Tolerance handed to LSQR as ``atol`` and ``btol``. Defaults to 1e-10.

    :Returns:
        ScreenResult: Residual norm, iteration count, normal-equation residual ``||V^T r||`` and convergence flag.
    """
    rows, cols = system.shape
    b = system.rhs_array()
    if rows == 0:
        return ScreenResult(0.0, 0, 0.0, True)
    a = system.matrix.to_scipy()
    iter_lim = iter_factor * (rows + cols)
    x, istop, itn = lsqr(a, b, atol=tol, btol=tol, iter_lim=iter_lim)[:3]
    r = a @ x - b
    residual = float(np.linalg.norm(r))
    normal_residual = float(np.linalg.norm(a.T @ r))
    result = ScreenResult(residual, int(itn), normal_residual, istop in _CONVERGED_CODES)
    logger.debug(
        '[SCREEN] {}x{} system, residual {:.3e} after {} iterations (stop code {})'.format(
            rows, cols, residual, itn, istop
        )
    )
    return result
