"""
Homomorphisms of A-modules as matrices of A-numbers

Index convention follows the biring: the upper index of f names the row.
Column orientations store f^k_i at matrix[k][i] (rows = target), row
orientations store f^i_k at matrix[i][k] (rows = source). Either way
`entry(k, i)` is the coefficient linking source coordinate i to target
coordinate k, and

    left modules:   w^k = Σ_i v^i · f(k, i)
    right modules:  w^k = Σ_i f(k, i) · v^i

An optional algebra homomorphism ḡ: A1 -> A2 first carries the source
coordinates into the algebra of the matrix entries.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ncmod.core.algebra import Algebra, AlgElem, check_algebra_hom, map_element
from ncmod.core.amodule import Orientation, OrientedVector, Shape, Side
from ncmod.core.biring import GenMatrix, identity, mat_sum, zeros
from ncmod.core.exact import DMatrix
from ncmod.core.exceptions import (
    AlgebraMismatchError,
    DimensionMismatchError,
    InvalidAlgebraError,
    OrientationMismatchError,
)

logger = logging.getLogger(__name__)


def _same_algebra(a: Algebra, b: Algebra) -> bool:
    return a is b or a == b


@dataclass(frozen=True)
class ModuleHom:
    """Homomorphism of oriented modules relative to fixed bases"""

    orientation: Orientation
    matrix: GenMatrix
    alg_hom: Optional[DMatrix] = None
    source_algebra: Optional[Algebra] = None

    def __post_init__(self):
        if not isinstance(self.matrix.carrier, Algebra):
            raise AlgebraMismatchError("Homomorphism entries must be algebra elements")
        if self.alg_hom is None:
            if self.source_algebra is not None and not _same_algebra(
                self.source_algebra, self.algebra
            ):
                raise AlgebraMismatchError(
                    f"Source {self.source_algebra.name} differs from {self.algebra.name} "
                    "and no algebra homomorphism is given"
                )
            return
        if self.source_algebra is None:
            raise AlgebraMismatchError("An algebra homomorphism needs a source algebra")
        if not check_algebra_hom(self.alg_hom, self.source_algebra, self.algebra):
            raise InvalidAlgebraError(
                f"Matrix is not an algebra homomorphism {self.source_algebra.name} -> {self.algebra.name}"
            )

    @property
    def algebra(self) -> Algebra:
        """Algebra of the matrix entries and of the target coordinates"""
        return self.matrix.carrier

    @property
    def domain_algebra(self) -> Algebra:
        return self.source_algebra if self.source_algebra is not None else self.algebra

    @property
    def source_dim(self) -> int:
        return self.matrix.cols if self.orientation.shape is Shape.COLUMN else self.matrix.rows

    @property
    def target_dim(self) -> int:
        return self.matrix.rows if self.orientation.shape is Shape.COLUMN else self.matrix.cols

    def entry(self, k: int, i: int) -> AlgElem:
        """Coefficient from source coordinate i to target coordinate k"""
        if self.orientation.shape is Shape.COLUMN:
            return self.matrix.entries[k][i]
        return self.matrix.entries[i][k]

    def carry(self, a: AlgElem) -> AlgElem:
        """ḡ(a), or a itself without an algebra homomorphism"""
        if self.alg_hom is None:
            return a
        return map_element(self.alg_hom, a, self.algebra)


def _from_entries(
    orientation: Orientation,
    algebra: Algebra,
    target_dim: int,
    source_dim: int,
    entry,
    alg_hom: Optional[DMatrix] = None,
    source_algebra: Optional[Algebra] = None,
) -> ModuleHom:
    """Build a hom from entry(k, i), laid out per the orientation's shape"""
    if orientation.shape is Shape.COLUMN:
        rows = [[entry(k, i) for i in range(source_dim)] for k in range(target_dim)]
        matrix = GenMatrix.from_rows(rows, algebra, cols=source_dim)
    else:
        rows = [[entry(k, i) for k in range(target_dim)] for i in range(source_dim)]
        matrix = GenMatrix.from_rows(rows, algebra, cols=target_dim)
    return ModuleHom(orientation, matrix, alg_hom, source_algebra)


def identity_hom(algebra: Algebra, orientation: Orientation, n: int) -> ModuleHom:
    return ModuleHom(orientation, identity(n, algebra))


def zero_hom(algebra: Algebra, orientation: Orientation, target_dim: int, source_dim: int) -> ModuleHom:
    if orientation.shape is Shape.COLUMN:
        return ModuleHom(orientation, zeros(target_dim, source_dim, algebra))
    return ModuleHom(orientation, zeros(source_dim, target_dim, algebra))


def apply(h: ModuleHom, coords: Sequence[AlgElem]) -> Tuple[AlgElem, ...]:
    """Coordinates of the image of the vector with the given coordinates"""
    if len(coords) != h.source_dim:
        raise DimensionMismatchError(
            f"Vector of length {len(coords)} for a map from dimension {h.source_dim}"
        )
    for v in coords:
        if not _same_algebra(v.algebra, h.domain_algebra):
            raise AlgebraMismatchError(
                f"Coordinate in {v.algebra.name}, map expects {h.domain_algebra.name}"
            )
    carried = [h.carry(v) for v in coords]
    left = h.orientation.side is Side.LEFT
    out = []
    for k in range(h.target_dim):
        total = h.algebra.zero
        for i, v in enumerate(carried):
            f = h.entry(k, i)
            total = total + (v * f if left else f * v)
        out.append(total)
    return tuple(out)


def apply_vector(h: ModuleHom, v: OrientedVector) -> OrientedVector:
    if v.orientation != h.orientation:
        raise OrientationMismatchError(
            f"{v.orientation.value} vector for a {h.orientation.value} homomorphism"
        )
    return OrientedVector(h.algebra, h.orientation, apply(h, v.comps))


def _check_parallel(g: ModuleHom, h: ModuleHom):
    if g.orientation != h.orientation:
        raise OrientationMismatchError(
            f"Cannot combine {g.orientation.value} and {h.orientation.value} homomorphisms"
        )
    if not _same_algebra(g.algebra, h.algebra) or not _same_algebra(
        g.domain_algebra, h.domain_algebra
    ):
        raise AlgebraMismatchError("Homomorphisms act between different algebras")


def hom_sum(g: ModuleHom, h: ModuleHom) -> ModuleHom:
    """Entrywise sum; apply distributes over it"""
    _check_parallel(g, h)
    if g.matrix.shape != h.matrix.shape:
        raise DimensionMismatchError(f"Shapes {g.matrix.shape} and {h.matrix.shape} differ")
    if g.alg_hom != h.alg_hom:
        raise AlgebraMismatchError("Homomorphisms use different algebra homomorphisms")
    return ModuleHom(g.orientation, mat_sum(g.matrix, h.matrix), g.alg_hom, g.source_algebra)


def hom_neg(g: ModuleHom) -> ModuleHom:
    return ModuleHom(g.orientation, -g.matrix, g.alg_hom, g.source_algebra)


def hom_compose(h: ModuleHom, g: ModuleHom) -> ModuleHom:
    """h after g: apply(result, v) = apply(h, apply(g, v))"""
    if g.orientation != h.orientation:
        raise OrientationMismatchError(
            f"Cannot compose {h.orientation.value} after {g.orientation.value}"
        )
    if g.target_dim != h.source_dim:
        raise DimensionMismatchError(
            f"g lands in dimension {g.target_dim}, h starts from {h.source_dim}"
        )
    if not _same_algebra(g.algebra, h.domain_algebra):
        raise AlgebraMismatchError(
            f"g lands in {g.algebra.name}, h starts from {h.domain_algebra.name}"
        )
    left = g.orientation.side is Side.LEFT

    def entry(k: int, i: int) -> AlgElem:
        total = h.algebra.zero
        for m in range(g.target_dim):
            gm = h.carry(g.entry(m, i))
            hm = h.entry(k, m)
            total = total + (gm * hm if left else hm * gm)
        return total

    if g.alg_hom is not None and h.alg_hom is not None:
        alg_hom = h.alg_hom @ g.alg_hom
    else:
        alg_hom = h.alg_hom if h.alg_hom is not None else g.alg_hom
    source_algebra = g.domain_algebra if alg_hom is not None else None
    return _from_entries(
        g.orientation,
        h.algebra,
        h.target_dim,
        g.source_dim,
        entry,
        alg_hom,
        source_algebra,
    )
