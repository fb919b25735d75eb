'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Sparse exact system ``V x = t * v_N`` whose columns are valuation vectors of a corpus of groups.
'''
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from core.spectra import ValuationVector

RowKey = Tuple[int, int]
GroupId = Tuple[int, int]


class SparseRationalMatrix(object):
    """
    Matrix with exact rational entries, rows indexed by ``(n, p)`` keys in lexicographic order and columns by group
    ids in corpus order. Only non-zero entries are stored.

    :Arguments:
        - row_index (Sequence[RowKey]): Row keys.
        - col_index (Sequence[GroupId]): Column ids.
        - entries (Dict[Tuple[int, int], Fraction]): ``(row, col)`` position to value.
    """

    def __init__(
            self,
            row_index: Sequence[RowKey],
            col_index: Sequence[GroupId],
            entries: Dict[Tuple[int, int], Fraction],
    ) -> None:
        self.row_index = list(row_index)
        self.col_index = list(col_index)
        self.entries = {pos: Fraction(v) for pos, v in sorted(entries.items()) if v != 0}

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_index), len(self.col_index)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def rows(self) -> List[Dict[int, Fraction]]:
        result = [dict() for _ in self.row_index]
        for (i, j), v in self.entries.items():
            result[i][j] = v
        return result

    def multiply(self, x: Sequence[Fraction]) -> List[Fraction]:
        """
        Exact ``V x``.
        """
        result = [Fraction(0)] * len(self.row_index)
        for (i, j), v in self.entries.items():
            result[i] += v * x[j]
        return result

    def left_multiply(self, y: Sequence[Fraction]) -> List[Fraction]:
        """
        Exact ``y^T V``.
        """
        result = [Fraction(0)] * len(self.col_index)
        for (i, j), v in self.entries.items():
            result[j] += y[i] * v
        return result

    def to_scipy(self) -> sparse.csr_matrix:
        m, k = self.shape
        if not self.entries:
            return sparse.csr_matrix((m, k), dtype=np.float64)
        rows, cols = zip(*self.entries.keys())
        data = [float(v) for v in self.entries.values()]
        return sparse.csr_matrix((data, (rows, cols)), shape=(m, k), dtype=np.float64)


class LinearSystem(object):
    """
    ``matrix`` together with its right-hand side ``target_multiplicity * target``.
    """

    def __init__(
            self,
            matrix: SparseRationalMatrix,
            rhs: Sequence[Fraction],
            target_id: Optional[GroupId] = None,
            target_multiplicity: int = 1,
    ) -> None:
        self.matrix = matrix
        self.rhs = [Fraction(v) for v in rhs]
        self.target_id = target_id
        self.target_multiplicity = target_multiplicity

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def is_solution(self, x: Sequence[Fraction]) -> bool:
        return self.matrix.multiply(x) == self.rhs

    def rhs_array(self) -> np.ndarray:
        return np.array([float(v) for v in self.rhs], dtype=np.float64)

    def __repr__(self) -> str:
        return 'LinearSystem(shape={}, nnz={}, target={}, multiplicity={})'.format(
            self.shape, self.matrix.nnz, self.target_id, self.target_multiplicity
        )


def build_system(
        corpus: Sequence[Tuple[GroupId, ValuationVector]],
        target: ValuationVector,
        target_multiplicity: int = 1,
        target_id: Optional[GroupId] = None,
) -> LinearSystem:
    """
    Assemble ``V x = t * v_N``. Rows cover the union of the supports of every column and of the target, sorted
    lexicographically on ``(n, p)``; columns keep corpus order.

    :Arguments:
        - corpus (Sequence[Tuple[GroupId, ValuationVector]]): Column ids with their valuation vectors.
        - target (ValuationVector): Valuation vector of the target group.
        - target_multiplicity (int, optional): Scale ``t`` of the right-hand side. Defaults to 1.
        - target_id (GroupId, optional): Id recorded on the system for reporting.
    """
    if len(corpus) == 0:
        raise ValueError("corpus must not be empty")
    if target_multiplicity < 1:
        raise ValueError("target multiplicity must be positive, got {}".format(target_multiplicity))
    col_index = []
    for group_id, _ in corpus:
        group_id = tuple(group_id)
        if group_id in col_index:
            raise ValueError("duplicate corpus id ({}, {})".format(*group_id))
        col_index.append(group_id)

    keys = set(target.keys())
    for _, vector in corpus:
        keys.update(vector.keys())
    row_index = sorted(keys)
    row_of = {key: i for i, key in enumerate(row_index)}

    entries = dict()
    for j, (_, vector) in enumerate(corpus):
        for key, value in vector.entries.items():
            entries[(row_of[key], j)] = Fraction(value)
    rhs = [Fraction(target.get(key) * target_multiplicity) for key in row_index]
    matrix = SparseRationalMatrix(row_index, col_index, entries)
    return LinearSystem(matrix, rhs, tuple(target_id) if target_id is not None else None, target_multiplicity)
