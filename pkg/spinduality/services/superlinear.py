"""
Graded linear algebra on a finite-dimensional super vector space.

EndoMatrix is a sparse exact operator with a declared Z2-degree. Subspace is
a reduced row echelon basis of a subspace, of W itself or of End(W) with
operators flattened to index a * size + c. The supercentralizer is solved
degree by degree as a sparse nullspace, and unital closures run either
directly on flattened operators or inside a known subalgebra, where every
product is read off in that subalgebra's coordinates.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from spinduality.exceptions import (
    NonHomogeneousError,
    NotInvariantError,
    SizeMismatchError,
)
from spinduality.services import linalg
from spinduality.services.exactfield import FieldElem

logger = logging.getLogger(__name__)

Grading = Callable[[int], int]


class EndoMatrix:
    """A sparse square matrix over Q(i, sqrt 2) with a declared Z2-degree"""

    __slots__ = ("size", "rows", "degree", "label", "_columns")

    def __init__(
        self,
        size: int,
        rows: linalg.SparseMatrix,
        degree: Optional[int] = None,
        label: str = "",
    ):
        self.size = size
        self.rows = {i: dict(row) for i, row in rows.items() if row}
        self.degree = degree
        self.label = label
        self._columns: Optional[linalg.SparseMatrix] = None

    @classmethod
    def identity(cls, size: int) -> "EndoMatrix":
        return cls(size, {i: {i: FieldElem.one()} for i in range(size)}, 0, "1")

    @classmethod
    def from_flat(cls, size: int, vector: linalg.Vector, degree=None):
        rows: linalg.SparseMatrix = {}
        for flat, value in vector.items():
            a, c = divmod(flat, size)
            rows.setdefault(a, {})[c] = value
        return cls(size, rows, degree)

    @property
    def columns(self) -> linalg.SparseMatrix:
        if self._columns is None:
            self._columns = linalg.transpose(self.rows)
        return self._columns

    def flat(self) -> linalg.Vector:
        return {
            a * self.size + c: value
            for a, row in self.rows.items()
            for c, value in row.items()
        }

    def entry(self, a: int, c: int) -> FieldElem:
        return self.rows.get(a, {}).get(c, FieldElem.zero())

    def _check(self, other: "EndoMatrix") -> None:
        if self.size != other.size:
            raise SizeMismatchError(f"sizes {self.size} and {other.size} differ")

    def __matmul__(self, other: "EndoMatrix") -> "EndoMatrix":
        self._check(other)
        degree = None
        if self.degree is not None and other.degree is not None:
            degree = (self.degree + other.degree) % 2
        return EndoMatrix(self.size, linalg.matmul(self.rows, other.rows), degree)

    def __add__(self, other: "EndoMatrix") -> "EndoMatrix":
        self._check(other)
        rows = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            linalg.add_scaled(rows.setdefault(i, {}), row, FieldElem.one())
        degree = self.degree if self.degree == other.degree else None
        return EndoMatrix(self.size, rows, degree)

    def scale(self, c) -> "EndoMatrix":
        c = FieldElem.coerce(c)
        if not c:
            return EndoMatrix(self.size, {}, self.degree)
        rows = {i: {j: c * v for j, v in row.items()} for i, row in self.rows.items()}
        return EndoMatrix(self.size, rows, self.degree, self.label)

    def __neg__(self) -> "EndoMatrix":
        return self.scale(-1)

    def __sub__(self, other: "EndoMatrix") -> "EndoMatrix":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    def __hash__(self):
        return hash((self.size, len(self.rows)))

    def __repr__(self) -> str:
        name = self.label or "EndoMatrix"
        return f"{name}(size={self.size}, degree={self.degree}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def trace(self) -> FieldElem:
        total = FieldElem.zero()
        for i, row in self.rows.items():
            if i in row:
                total = total + row[i]
        return total

    def apply(self, vector: linalg.Vector) -> linalg.Vector:
        return linalg.matvec(self.rows, self.columns, vector)

    def is_diagonal(self) -> bool:
        return all(set(row) == {i} for i, row in self.rows.items())

    def actual_degree(self, grading: Sequence[int]) -> Optional[int]:
        """Degree read off the support; None for a non-homogeneous matrix."""
        degrees = {
            (grading[a] + grading[c]) % 2
            for a, row in self.rows.items()
            for c in row
        }
        if len(degrees) > 1:
            return None
        if degrees:
            return degrees.pop()
        return self.degree or 0

    def supercommutes(self, other: "EndoMatrix") -> bool:
        """self * other == (-1)^(deg self * deg other) other * self."""
        if self.degree is None or other.degree is None:
            raise NonHomogeneousError("supercommutator needs homogeneous operands")
        left = self @ other
        right = other @ self
        if self.degree and other.degree:
            right = -right
        return left == right


def end_grading(grading: Sequence[int]) -> Grading:
    """Degree of the flattened matrix unit E_ac."""
    size = len(grading)

    def degree(flat: int) -> int:
        a, c = divmod(flat, size)
        return (grading[a] + grading[c]) % 2

    return degree


class Subspace:
    """
    A subspace held as a fully reduced row echelon basis.

    Coordinates of a member are its values at the pivot columns. When a
    grading is given, each basis row of a graded subspace is homogeneous.
    """

    def __init__(self, size: int, grading: Optional[Grading] = None):
        self.size = size
        self.grading = grading
        self.builder = linalg.SpanBuilder()

    @classmethod
    def spanned_by(
        cls, size: int, vectors, grading: Optional[Grading] = None
    ) -> "Subspace":
        space = cls(size, grading)
        for vector in vectors:
            space.add(vector)
        return space

    @classmethod
    def whole(cls, size: int, grading: Optional[Grading] = None) -> "Subspace":
        space = cls(size, grading)
        for i in range(size):
            space.builder.adopt(i, {i: FieldElem.one()})
        return space

    def add(self, vector: linalg.Vector) -> bool:
        return self.builder.add(vector) is not None

    @property
    def dim(self) -> int:
        return self.builder.dim

    @property
    def pivots(self) -> List[int]:
        return sorted(self.builder.pivot_row_map)

    @property
    def rows(self) -> List[linalg.Vector]:
        return [row for _, row in self.builder.rows()]

    def row_degree(self, vector: linalg.Vector) -> Optional[int]:
        if self.grading is None:
            return None
        degrees = {self.grading(j) for j in vector}
        return degrees.pop() if len(degrees) == 1 else None

    @property
    def degrees(self) -> List[Optional[int]]:
        return [self.row_degree(row) for row in self.rows]

    @property
    def is_graded(self) -> bool:
        return self.grading is not None and None not in self.degrees

    @property
    def graded_dim(self) -> Tuple[int, int]:
        degrees = self.degrees
        if None in degrees:
            raise NonHomogeneousError("subspace basis is not homogeneous")
        odd = sum(degrees)
        return (len(degrees) - odd, odd)

    def contains(self, vector: linalg.Vector) -> bool:
        return self.builder.contains(vector)

    def coordinates(self, vector: linalg.Vector) -> Dict[int, FieldElem]:
        """Coordinates (by pivot position) of a vector known to lie in the span."""
        index = {p: q for q, p in enumerate(self.pivots)}
        return {index[p]: value for p, value in vector.items() if p in index}


def _check_homogeneous(gens: Sequence[EndoMatrix], grading: Sequence[int]) -> None:
    for g in gens:
        actual = g.actual_degree(grading)
        if g.degree is None or actual is None or actual != g.degree:
            raise NonHomogeneousError(
                f"generator {g.label or g!r} is not homogeneous of degree {g.degree}"
            )


def supercentralizer(gens: Sequence[EndoMatrix], grading: Sequence[int]) -> Subspace:
    """
    All f with f g = (-1)^(deg f * deg g) g f for every generator g.

    Solved separately for deg f = 0 and deg f = 1. Diagonal generators fix
    f_ac = 0 wherever g_cc != g_aa before any elimination.
    """
    size = len(grading)
    _check_homogeneous(gens, grading)
    diagonal = [g for g in gens if g.is_diagonal()]
    others = [g for g in gens if not g.is_diagonal()]
    result = Subspace(size * size, end_grading(grading))
    zero = FieldElem.zero()
    for alpha in (0, 1):
        unknowns = []
        for a in range(size):
            for c in range(size):
                if (grading[a] + grading[c]) % 2 != alpha:
                    continue
                if any(g.entry(c, c) != g.entry(a, a) for g in diagonal):
                    continue
                unknowns.append(a * size + c)
        column_of = {flat: j for j, flat in enumerate(unknowns)}
        equations: linalg.SparseMatrix = {}
        for g in others:
            sign = -1 if alpha and g.degree else 1
            target = (alpha + g.degree) % 2
            columns = g.columns
            for a in range(size):
                g_row = g.rows.get(a, {})
                for b in range(size):
                    if (grading[a] + grading[b]) % 2 != target:
                        continue
                    row: linalg.Vector = {}
                    for c, g_cb in columns.get(b, {}).items():
                        j = column_of.get(a * size + c)
                        if j is not None:
                            row[j] = row.get(j, zero) + g_cb
                    for c, g_ac in g_row.items():
                        j = column_of.get(c * size + b)
                        if j is not None:
                            term = g_ac if sign < 0 else -g_ac
                            row[j] = row.get(j, zero) + term
                    row = {j: v for j, v in row.items() if v}
                    if row:
                        equations[len(equations)] = row
        basis, free = linalg.nullspace(equations, len(unknowns))
        for vector, pivot in zip(basis, free):
            result.builder.adopt(
                unknowns[pivot], {unknowns[j]: v for j, v in vector.items()}
            )
        logger.debug(
            f"supercentralizer degree {alpha}: {len(unknowns)} unknowns, "
            f"{len(equations)} equations, {len(basis)} solutions"
        )
    logger.info(
        f"supercentralizer of {len(gens)} generators on dim {size}: {result.dim}"
    )
    return result


def closure(
    gens: Sequence[EndoMatrix], size: int, grading: Optional[Sequence[int]] = None
) -> Subspace:
    """Unital algebra generated by gens, as a subspace of End."""
    result = Subspace(size * size, end_grading(grading) if grading else None)
    identity = EndoMatrix.identity(size)
    result.add(identity.flat())
    pending = [identity]
    while pending:
        element = pending.pop()
        for g in gens:
            candidate = element @ g
            if result.add(candidate.flat()):
                pending.append(candidate)
    logger.debug(f"closure of {len(gens)} generators on dim {size}: {result.dim}")
    return result


def closure_dim_within(
    gens: Sequence[EndoMatrix], within: Subspace, size: int
) -> int:
    """
    Dimension of the unital algebra generated by gens inside a subalgebra.

    within must be a subalgebra of End containing the identity and every
    generator; products are then read off at its pivots without reduction.
    """
    identity = EndoMatrix.identity(size)
    for g in [identity, *gens]:
        if not within.contains(g.flat()):
            raise NotInvariantError(f"{g.label or 'generator'} is not in the algebra")
    basis = [EndoMatrix.from_flat(size, row) for row in within.rows]
    right_actions = []
    for g in gens:
        action = {}
        for q, element in enumerate(basis):
            action[q] = within.coordinates((element @ g).flat())
        right_actions.append(action)
    builder = linalg.SpanBuilder()
    start = within.coordinates(identity.flat())
    builder.add(start)
    pending = [start]
    while pending:
        coords = pending.pop()
        for action in right_actions:
            image: linalg.Vector = {}
            for q, x_q in coords.items():
                linalg.add_scaled(image, action[q], x_q)
            if builder.add(image) is not None:
                pending.append(image)
    logger.debug(f"closure inside algebra of dim {within.dim}: {builder.dim}")
    return builder.dim


def restrict(m: EndoMatrix, s: Subspace) -> EndoMatrix:
    """Matrix of m on s in pivot coordinates; s must be m-invariant."""
    pivots = s.pivots
    index = {p: q for q, p in enumerate(pivots)}
    columns: linalg.SparseMatrix = {}
    for q, row in enumerate(s.rows):
        image = m.apply(row)
        if not s.contains(image):
            raise NotInvariantError(
                f"{m.label or 'operator'} does not stabilize the subspace"
            )
        columns[q] = {index[p]: v for p, v in image.items() if p in index}
    return EndoMatrix(s.dim, linalg.transpose(columns), m.degree, m.label)


def trace_on(s: Subspace, m: EndoMatrix) -> FieldElem:
    return restrict(m, s).trace()


def supertrace_on(s: Subspace, m: EndoMatrix) -> FieldElem:
    """Trace on the even part minus trace on the odd part."""
    restricted = restrict(m, s)
    total = FieldElem.zero()
    for q, degree in enumerate(s.degrees):
        if degree is None:
            raise NonHomogeneousError("supertrace needs a graded subspace")
        value = restricted.entry(q, q)
        total = total - value if degree else total + value
    return total
