"""
Exact sparse linear algebra over Q(i, sqrt 2).

Matrices use the dict-of-dicts row layout of sympy's SDM: {row: {col: value}}
with zeros absent. Reduced row echelon forms and nullspaces come straight
from sympy.polys.matrices.sdm, whose elimination only needs field
operations, so FieldElem entries go through unchanged. SpanBuilder is the
incremental form of the same elimination loop, used by every closure
computation.
"""

import logging
from collections import defaultdict
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices.sdm import sdm_irref, sdm_nullspace_from_rref

from spinduality.exceptions import SingularMatrixError, SizeMismatchError
from spinduality.services.exactfield import FieldElem

logger = logging.getLogger(__name__)

Vector = Dict[int, FieldElem]
SparseMatrix = Dict[int, Dict[int, FieldElem]]


def _clean(row: Mapping[int, FieldElem]) -> Vector:
    return {j: v for j, v in row.items() if v}


def rref(rows: Mapping[int, Mapping[int, FieldElem]]):
    """
    Reduced row echelon form of a sparse matrix.

    Returns (rref, pivots, nonzero_cols) exactly as sdm_irref does. Zero rows
    are dropped before elimination.
    """
    matrix = {}
    for i, row in rows.items():
        cleaned = _clean(row)
        if cleaned:
            matrix[i] = cleaned
    return sdm_irref(matrix)


def nullspace(
    rows: Mapping[int, Mapping[int, FieldElem]], ncols: int
) -> Tuple[List[Vector], List[int]]:
    """
    Basis of {x : rows * x = 0} over columns 0..ncols-1.

    Each basis vector carries a 1 at its own free column and 0 at every other
    free column, so the free columns double as coordinate positions.
    """
    reduced, pivots, nonzero_cols = rref(rows)
    basis, free = sdm_nullspace_from_rref(
        reduced, FieldElem.one(), ncols, pivots, nonzero_cols
    )
    return [_clean(vector) for vector in basis], list(free)


def inverse(matrix: Sequence[Sequence[FieldElem]]) -> List[List[FieldElem]]:
    """Inverse of a square dense matrix by Gauss-Jordan on [M | I]."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise SizeMismatchError("inverse() needs a square matrix")
    augmented = {}
    for i, row in enumerate(matrix):
        entries = {j: FieldElem.coerce(v) for j, v in enumerate(row) if v}
        entries[size + i] = FieldElem.one()
        augmented[i] = entries
    reduced, pivots, _ = rref(augmented)
    if list(pivots[:size]) != list(range(size)) or len(pivots) != size:
        raise SingularMatrixError(f"matrix of size {size} is singular")
    zero = FieldElem.zero()
    return [
        [reduced[i].get(size + j, zero) for j in range(size)] for i in range(size)
    ]


def matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Sparse product, row by row over the nonzero rows of b."""
    product = {}
    b_rows = set(b)
    for i, a_row in a.items():
        row = {}
        for k in set(a_row) & b_rows:
            a_ik = a_row[k]
            for j, b_kj in b[k].items():
                value = row.get(j)
                row[j] = a_ik * b_kj if value is None else value + a_ik * b_kj
        row = _clean(row)
        if row:
            product[i] = row
    return product


def matvec(a: SparseMatrix, columns: SparseMatrix, v: Vector) -> Vector:
    """Product a * v where columns is the column layout of a."""
    result: Vector = {}
    for j, v_j in v.items():
        for i, a_ij in columns.get(j, {}).items():
            value = result.get(i)
            result[i] = a_ij * v_j if value is None else value + a_ij * v_j
    return _clean(result)


def transpose(a: SparseMatrix) -> SparseMatrix:
    columns: SparseMatrix = defaultdict(dict)
    for i, row in a.items():
        for j, value in row.items():
            columns[j][i] = value
    return dict(columns)


def add_scaled(target: Vector, source: Mapping[int, FieldElem], scale) -> None:
    """target += scale * source, in place, dropping cancelled entries."""
    for j, value in source.items():
        current = target.get(j)
        updated = scale * value if current is None else current + scale * value
        if updated:
            target[j] = updated
        elif current is not None:
            del target[j]


class SpanBuilder:
    """
    Incremental reduced row echelon basis of a growing span.

    Rows are kept fully reduced: each basis row has a 1 at its pivot and 0 at
    every other pivot. Vectors may be keyed by any hashable labels; labels are
    mapped to integer columns in order of first appearance.
    """

    def __init__(self):
        self.pivot_row_map: Dict[int, Vector] = {}
        self.nonzero_columns: Dict[int, set] = defaultdict(set)
        self._column_of: Dict[Hashable, int] = {}
        self._labels: List[Hashable] = []

    @property
    def dim(self) -> int:
        return len(self.pivot_row_map)

    def column(self, label: Hashable) -> int:
        index = self._column_of.get(label)
        if index is None:
            index = len(self._labels)
            self._column_of[label] = index
            self._labels.append(label)
        return index

    def label(self, column: int) -> Hashable:
        return self._labels[column]

    def encode(self, vector: Mapping[Hashable, FieldElem]) -> Vector:
        return {self.column(key): value for key, value in vector.items() if value}

    def decode(self, vector: Mapping[int, FieldElem]) -> Dict[Hashable, FieldElem]:
        return {self._labels[j]: value for j, value in vector.items()}

    def reduce(self, vector: Mapping[int, FieldElem]) -> Vector:
        """Residual of an encoded vector modulo the current span."""
        residual = _clean(vector)
        for j in set(residual) & set(self.pivot_row_map):
            coefficient = residual.get(j)
            if coefficient:
                add_scaled(residual, self.pivot_row_map[j], -coefficient)
        return residual

    def add(self, vector: Mapping[int, FieldElem]) -> Optional[Vector]:
        """
        Add an encoded vector to the span.

        Returns the normalised new basis row when the vector was independent,
        otherwise None.
        """
        residual = self.reduce(vector)
        if not residual:
            return None
        pivot = min(residual)
        pivot_inv = residual[pivot] ** -1
        row = {j: value * pivot_inv for j, value in residual.items()}
        # clear the new pivot column from earlier rows
        for k in self.nonzero_columns.pop(pivot, set()):
            earlier = self.pivot_row_map[k]
            factor = earlier[pivot]
            before = set(earlier)
            add_scaled(earlier, row, -factor)
            after = set(earlier)
            for j in before - after:
                if j != k:
                    self.nonzero_columns[j].discard(k)
            for j in after - before:
                self.nonzero_columns[j].add(k)
        self.pivot_row_map[pivot] = row
        for j in row:
            if j != pivot:
                self.nonzero_columns[j].add(pivot)
        return row

    def adopt(self, pivot: int, row: Mapping[int, FieldElem]) -> None:
        """
        Insert a row that is already reduced against the span.

        row must be 1 at pivot and 0 at every existing pivot, and every
        existing row must be 0 at pivot. Nullspace bases meet this with their
        free columns as pivots.
        """
        row = _clean(row)
        self.pivot_row_map[pivot] = row
        for j in row:
            if j != pivot:
                self.nonzero_columns[j].add(pivot)

    def add_labelled(self, vector: Mapping[Hashable, FieldElem]) -> Optional[Vector]:
        return self.add(self.encode(vector))

    def contains(self, vector: Mapping[int, FieldElem]) -> bool:
        return not self.reduce(vector)

    def rows(self) -> List[Tuple[int, Vector]]:
        return sorted(self.pivot_row_map.items())


def rank(vectors: Iterable[Mapping[Hashable, FieldElem]]) -> int:
    builder = SpanBuilder()
    for vector in vectors:
        builder.add_labelled(vector)
    return builder.dim


def solve_in_span(
    vectors: Sequence[Mapping[Hashable, FieldElem]],
    target: Mapping[Hashable, FieldElem],
) -> Optional[List[FieldElem]]:
    """
    Coefficients c with sum c_i * vectors[i] == target, or None.

    The vectors must be linearly independent.
    """
    count = len(vectors)
    equations: Dict[Hashable, Vector] = defaultdict(dict)
    for i, vector in enumerate(vectors):
        for key, value in vector.items():
            if value:
                equations[key][i] = value
    for key, value in target.items():
        if value:
            equations[key][count] = -FieldElem.coerce(value)
    rows = {n: row for n, row in enumerate(equations.values())}
    reduced, pivots, _ = rref(rows)
    if count in pivots:
        return None
    if len(pivots) != count:
        raise SingularMatrixError("solve_in_span() needs independent vectors")
    zero = FieldElem.zero()
    solution = [zero] * count
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = -reduced[row_index].get(count, zero)
    return solution
