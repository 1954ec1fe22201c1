"""
Free left and right A-modules of columns and rows

A vector of Aⁿ is a tuple of A-numbers tagged with an orientation. The side
(left or right) decides on which side coefficients multiply; the shape
(column or row) is bookkeeping that only matters for homomorphism
matrices. Every question about coordinates is answered by rewriting the
A-linear equation as a rational linear system: each unknown A-coefficient
becomes dim(A) rational unknowns.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ncmod.core.algebra import Algebra, AlgElem, left_regular, right_regular
from ncmod.core.exact import DMatrix, Infinite, NoSolution, Unique, rank, solve_linear
from ncmod.core.exceptions import (
    AlgebraMismatchError,
    DimensionMismatchError,
    InvalidBasisError,
    OrientationMismatchError,
)

logger = logging.getLogger(__name__)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class Shape(str, Enum):
    COLUMN = "column"
    ROW = "row"


class Orientation(str, Enum):
    """The four module types"""

    LEFT_COLUMN = "left-column"
    LEFT_ROW = "left-row"
    RIGHT_COLUMN = "right-column"
    RIGHT_ROW = "right-row"

    @property
    def side(self) -> Side:
        return Side.LEFT if self.value.startswith("left") else Side.RIGHT

    @property
    def shape(self) -> Shape:
        return Shape.COLUMN if self.value.endswith("column") else Shape.ROW

    @classmethod
    def parse(cls, text: Union[str, "Orientation"]) -> "Orientation":
        try:
            return cls(text)
        except ValueError:
            choices = ", ".join(o.value for o in cls)
            raise OrientationMismatchError(
                f"Unknown orientation {text!r}; expected one of {choices}"
            ) from None


def act(orientation: Orientation, scalar: AlgElem, component: AlgElem) -> AlgElem:
    """Scalar times component on the orientation's side"""
    if orientation.side is Side.LEFT:
        return scalar * component
    return component * scalar


@dataclass(frozen=True)
class OrientedVector:
    algebra: Algebra
    orientation: Orientation
    comps: Tuple[AlgElem, ...]

    def __post_init__(self):
        for c in self.comps:
            if c.algebra is not self.algebra and c.algebra != self.algebra:
                raise AlgebraMismatchError(
                    f"Component in {c.algebra.name} inside a {self.algebra.name} vector"
                )

    @classmethod
    def of(cls, orientation: Union[str, Orientation], comps: Sequence[AlgElem]) -> "OrientedVector":
        if not comps:
            raise DimensionMismatchError("Vector needs at least one component")
        return cls(comps[0].algebra, Orientation.parse(orientation), tuple(comps))

    def __len__(self) -> int:
        return len(self.comps)

    def _check(self, other: "OrientedVector"):
        _check_compatible([self, other])
        if len(self) != len(other):
            raise DimensionMismatchError(f"Vectors of length {len(self)} and {len(other)}")

    def __add__(self, other: "OrientedVector") -> "OrientedVector":
        self._check(other)
        return replace(self, comps=tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "OrientedVector") -> "OrientedVector":
        self._check(other)
        return replace(self, comps=tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self) -> "OrientedVector":
        return replace(self, comps=tuple(-a for a in self.comps))

    def act(self, scalar: AlgElem) -> "OrientedVector":
        """a·v for left modules, v·a for right modules"""
        return replace(self, comps=tuple(act(self.orientation, scalar, c) for c in self.comps))

    def scale(self, d) -> "OrientedVector":
        return replace(self, comps=tuple(c.scale(d) for c in self.comps))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def flatten(self) -> Tuple[Fraction, ...]:
        return tuple(x for c in self.comps for x in c.coords)

    def to_strings(self) -> List[str]:
        return [c.to_coord_string() for c in self.comps]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"


def zero_vector(algebra: Algebra, orientation: Orientation, n: int) -> OrientedVector:
    return OrientedVector(algebra, orientation, (algebra.zero,) * n)


def _check_compatible(vectors: Sequence[OrientedVector]):
    first = vectors[0]
    for v in vectors[1:]:
        if v.orientation != first.orientation:
            raise OrientationMismatchError(
                f"Orientations {first.orientation.value} and {v.orientation.value} differ"
            )
        if v.algebra is not first.algebra and v.algebra != first.algebra:
            raise AlgebraMismatchError(
                f"Vectors over {first.algebra.name} and {v.algebra.name}"
            )


@dataclass(frozen=True)
class Basis:
    """Ordered family of vectors of equal length and one orientation"""

    orientation: Orientation
    vectors: Tuple[OrientedVector, ...]
    verified: bool = False

    def __post_init__(self):
        if not self.vectors:
            raise DimensionMismatchError("A basis needs at least one vector")
        for v in self.vectors:
            if v.orientation != self.orientation:
                raise OrientationMismatchError(
                    f"{v.orientation.value} vector in a {self.orientation.value} basis"
                )
        _check_compatible(self.vectors)
        if len({len(v) for v in self.vectors}) != 1:
            raise DimensionMismatchError("Basis vectors have different lengths")

    @classmethod
    def of(cls, vectors: Sequence[OrientedVector]) -> "Basis":
        if not vectors:
            raise DimensionMismatchError("A basis needs at least one vector")
        return cls(vectors[0].orientation, tuple(vectors))

    @property
    def algebra(self) -> Algebra:
        return self.vectors[0].algebra

    @property
    def length(self) -> int:
        """n, the length of each vector"""
        return len(self.vectors[0])

    def __len__(self) -> int:
        return len(self.vectors)


def standard_basis(algebra: Algebra, orientation: Orientation, n: int) -> Basis:
    one, zero = algebra.one, algebra.zero
    vectors = tuple(
        OrientedVector(algebra, orientation, tuple(one if r == i else zero for r in range(n)))
        for i in range(n)
    )
    return Basis(orientation, vectors, verified=True)


def contract(coeffs: Sequence[AlgElem], vectors: Sequence[OrientedVector]) -> OrientedVector:
    """Σ cⁱ v_i (left modules) or Σ v_i cⁱ (right modules), componentwise"""
    if len(coeffs) != len(vectors):
        raise DimensionMismatchError(
            f"{len(coeffs)} coefficients for {len(vectors)} vectors"
        )
    if not vectors:
        raise DimensionMismatchError("Cannot contract an empty family")
    _check_compatible(vectors)
    first = vectors[0]
    for c in coeffs:
        if c.algebra is not first.algebra and c.algebra != first.algebra:
            raise AlgebraMismatchError(
                f"Coefficient in {c.algebra.name} for {first.algebra.name} vectors"
            )
    n = len(first)
    if any(len(v) != n for v in vectors):
        raise DimensionMismatchError("Vectors have different lengths")
    comps = []
    for r in range(n):
        total = first.algebra.zero
        for c, v in zip(coeffs, vectors):
            total = total + act(first.orientation, c, v.comps[r])
        comps.append(total)
    return OrientedVector(first.algebra, first.orientation, tuple(comps))


def expand(basis: Basis, coords: Sequence[AlgElem]) -> OrientedVector:
    """The vector with the given coordinates relative to basis"""
    return contract(coords, basis.vectors)


@dataclass(frozen=True)
class UniqueCoordinates:
    coords: Tuple[AlgElem, ...]


@dataclass(frozen=True)
class NotInSpan:
    pass


@dataclass(frozen=True)
class NonUnique:
    """One solution plus nonzero coordinates of the zero vector"""

    particular: Tuple[AlgElem, ...]
    witness: Tuple[AlgElem, ...]


CoordinatesResult = Union[UniqueCoordinates, NotInSpan, NonUnique]


def linearize(vectors: Sequence[OrientedVector]) -> DMatrix:
    """Rational matrix of x ↦ Σ xⁱ v_i (left) or x ↦ Σ v_i xⁱ (right).

    Row block r is the r-th component, column block i the unknown xⁱ.
    Column block i therefore lists the flattened vectors e_k·v_i (left)
    or v_i·e_k (right), the extension of the family.
    """
    _check_compatible(vectors)
    first = vectors[0]
    d = first.algebra.dim
    n = len(first)
    m = len(vectors)
    blocks = []
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatchError("Vectors have different lengths")
        if first.orientation.side is Side.LEFT:
            # x·b = R(b)·coords(x)
            blocks.append([right_regular(c) for c in v.comps])
        else:
            blocks.append([left_regular(c) for c in v.comps])
    rows = []
    for r in range(n):
        for k in range(d):
            rows.append([blocks[i][r].entries[k][j] for i in range(m) for j in range(d)])
    return DMatrix.from_rows(rows, cols=m * d)


def _split(algebra: Algebra, flat: Sequence[Fraction], m: int) -> Tuple[AlgElem, ...]:
    d = algebra.dim
    return tuple(AlgElem(algebra, tuple(flat[i * d:(i + 1) * d])) for i in range(m))


def coordinates(v: OrientedVector, basis: Basis) -> CoordinatesResult:
    """Solve expand(basis, x) = v for x"""
    _check_compatible([v] + list(basis.vectors))
    if len(v) != basis.length:
        raise DimensionMismatchError(
            f"Vector of length {len(v)} against basis vectors of length {basis.length}"
        )
    system = linearize(basis.vectors)
    result = solve_linear(system, DMatrix.column_vector(v.flatten()))
    m = len(basis)
    if isinstance(result, NoSolution):
        return NotInSpan()
    if isinstance(result, Unique):
        return UniqueCoordinates(_split(v.algebra, result.solution, m))
    assert isinstance(result, Infinite)
    logger.debug(f"Coordinates not unique, nullspace dimension {len(result.nullspace_basis)}")
    return NonUnique(
        particular=_split(v.algebra, result.particular, m),
        witness=_split(v.algebra, result.nullspace_basis[0], m),
    )


@dataclass(frozen=True)
class Extension:
    """Products of algebra basis elements with module basis vectors"""

    vectors: Tuple[OrientedVector, ...]
    rank: int

    @property
    def full(self) -> bool:
        return self.rank == len(self.vectors)


def extend_basis(basis: Basis) -> Extension:
    """e_k·v_i (left) or v_i·e_k (right) for every basis vector and every e_k"""
    algebra = basis.algebra
    vectors = []
    for v in basis.vectors:
        for e in algebra.basis():
            vectors.append(v.act(e))
    flat = DMatrix.from_rows([w.flatten() for w in vectors], cols=basis.length * algebra.dim)
    r = rank(flat)
    if r < basis.length * algebra.dim:
        logger.debug(f"Extension rank {r} below {basis.length * algebra.dim}")
    return Extension(tuple(vectors), r)


def certify(basis: Basis) -> Basis:
    """Mark basis verified when its extension is a rational basis of Aⁿ"""
    ext = extend_basis(basis)
    expected = basis.length * basis.algebra.dim
    if len(basis) != basis.length or ext.rank != expected:
        raise InvalidBasisError(
            f"Extension has rank {ext.rank}, a basis of A^{basis.length} needs {expected}"
        )
    return replace(basis, verified=True)


def in_span(v: OrientedVector, generators: Sequence[OrientedVector]) -> bool:
    if not generators:
        return v.is_zero()
    _check_compatible([v] + list(generators))
    if any(len(g) != len(v) for g in generators):
        raise DimensionMismatchError("Generators and vector have different lengths")
    result = solve_linear(linearize(generators), DMatrix.column_vector(v.flatten()))
    return not isinstance(result, NoSolution)


def is_linearly_independent(vectors: Sequence[OrientedVector]) -> bool:
    """Zero has only the zero coordinates"""
    system = linearize(vectors)
    return rank(system) == system.cols


def is_generating_set(vectors: Sequence[OrientedVector]) -> bool:
    """The span is the whole module Aⁿ"""
    system = linearize(vectors)
    return rank(system) == system.rows


def is_quasibasis(vectors: Sequence[OrientedVector]) -> bool:
    """Generating, and no vector can be dropped"""
    if not is_generating_set(vectors):
        return False
    if len(vectors) == 1:
        return True
    for i in range(len(vectors)):
        rest = list(vectors[:i]) + list(vectors[i + 1:])
        if is_generating_set(rest):
            return False
    return True
