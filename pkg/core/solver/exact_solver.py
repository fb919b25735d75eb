'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Exact Gauss-Jordan elimination over the rationals for sparse systems, returning either the affine
    solution space or a certificate of infeasibility.
'''
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from loguru import logger

from .linear_system import LinearSystem, RowKey


class SolverSoundnessError(RuntimeError):
    pass


class SolutionSpace(NamedTuple):
    """
    ``particular + span(nullspace_basis)``. The particular solution sets every free column to zero.
    """
    particular: Tuple[Fraction, ...]
    nullspace_basis: Tuple[Tuple[Fraction, ...], ...]
    rank: int
    pivot_columns: Tuple[int, ...]

    @property
    def feasible(self) -> bool:
        return True

    def is_integral(self, scale: int = 1) -> bool:
        return all((v * scale).denominator == 1 for v in self.particular)


class Infeasibility(NamedTuple):
    """
    Row combination ``y`` with ``y^T V = 0`` and ``y^T rhs = value != 0``. ``row_key`` names the row whose reduced form
    became the inconsistent zero row.
    """
    witness: Tuple[Fraction, ...]
    value: Fraction
    row_key: RowKey
    rank: int

    @property
    def feasible(self) -> bool:
        return False


SolveResult = Union[SolutionSpace, Infeasibility]


def _choose_pivot(rows: List[Dict[int, Fraction]], remaining: List[int], free: set) -> Optional[Tuple[int, int]]:
    counts = dict()
    first_row = dict()
    for i in remaining:
        for j in rows[i]:
            if j in free:
                counts[j] = counts.get(j, 0) + 1
                if j not in first_row:
                    first_row[j] = i
    if not counts:
        return None
    col = min(counts, key=lambda j: (counts[j], first_row[j], j))
    return first_row[col], col


def solve_exact(system: LinearSystem) -> SolveResult:
    """
    Reduce ``[V | rhs]`` to reduced row echelon form with exact arithmetic. At each step the pivot column is the
    unpivoted column with the fewest non-zeros among the unpivoted rows, ties broken by its first such row and then
    by column order; the pivot row is that first row. Every row carries the combination of original rows it
    currently equals, which becomes the witness when a zero row keeps a non-zero right-hand side.

    Results are re-checked by exact multiplication before being returned.

    :Arguments:
        - system (LinearSystem): Assembled system.

    :Returns:
        SolutionSpace or Infeasibility.
    """
    matrix = system.matrix
    m, k = matrix.shape
    rows = matrix.rows()
    rhs = list(system.rhs)
    history = [{i: Fraction(1)} for i in range(m)]
    remaining = list(range(m))
    free = set(range(k))
    pivots = []

    while True:
        choice = _choose_pivot(rows, remaining, free)
        if choice is None:
            break
        pr, pc = choice
        scale = rows[pr][pc]
        rows[pr] = {j: v / scale for j, v in rows[pr].items()}
        rhs[pr] /= scale
        history[pr] = {i: v / scale for i, v in history[pr].items()}
        for i in range(m):
            if i == pr or pc not in rows[i]:
                continue
            factor = rows[i][pc]
            row = rows[i]
            for j, v in rows[pr].items():
                value = row.get(j, 0) - factor * v
                if value == 0:
                    row.pop(j, None)
                else:
                    row[j] = value
            rhs[i] -= factor * rhs[pr]
            hist = history[i]
            for r, v in history[pr].items():
                value = hist.get(r, 0) - factor * v
                if value == 0:
                    hist.pop(r, None)
                else:
                    hist[r] = value
        remaining.remove(pr)
        free.discard(pc)
        pivots.append((pr, pc))

    rank = len(pivots)
    for i in sorted(remaining):
        if rhs[i] != 0:
            witness = [Fraction(0)] * m
            for r, v in history[i].items():
                witness[r] = v
            result = Infeasibility(tuple(witness), rhs[i], matrix.row_index[i], rank)
            _check_infeasibility(system, result)
            logger.debug('[SOLVER] infeasible at row {}, rank {}'.format(matrix.row_index[i], rank))
            return result

    particular = [Fraction(0)] * k
    for pr, pc in pivots:
        particular[pc] = rhs[pr]
    basis = []
    for f in sorted(free):
        vector = [Fraction(0)] * k
        vector[f] = Fraction(1)
        for pr, pc in pivots:
            if f in rows[pr]:
                vector[pc] = -rows[pr][f]
        basis.append(tuple(vector))
    result = SolutionSpace(tuple(particular), tuple(basis), rank, tuple(sorted(pc for _, pc in pivots)))
    _check_solution(system, result)
    logger.debug('[SOLVER] feasible, rank {} with {} free columns'.format(rank, len(basis)))
    return result


def _check_solution(system: LinearSystem, space: SolutionSpace) -> None:
    if not system.is_solution(space.particular):
        raise SolverSoundnessError("particular solution does not satisfy the system")
    zero = [Fraction(0)] * system.shape[0]
    for b in space.nullspace_basis:
        if system.matrix.multiply(b) != zero:
            raise SolverSoundnessError("nullspace vector is not annihilated by the matrix")


def _check_infeasibility(system: LinearSystem, report: Infeasibility) -> None:
    if any(v != 0 for v in system.matrix.left_multiply(report.witness)):
        raise SolverSoundnessError("infeasibility witness does not annihilate the matrix")
    value = sum((y * b for y, b in zip(report.witness, system.rhs)), Fraction(0))
    if value == 0 or value != report.value:
        raise SolverSoundnessError("infeasibility witness does not separate the right-hand side")
