"""
Finite-dimensional algebras over the rationals given by structural constants

An algebra of dimension n is the table C[i][j][k] with
e_i·e_j = C[i][j][k] e_k; elements are coordinate tuples relative to the
basis e_0..e_{n-1}. Nothing here assumes associativity, commutativity or a
unit.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ncmod.core.exact import (
    DMatrix,
    RationalLike,
    Unique,
    format_rational,
    parse_rational,
    rank,
    solve_linear,
    to_rational,
)
from ncmod.core.exceptions import (
    AlgebraMismatchError,
    DimensionMismatchError,
    InvalidAlgebraError,
    UnknownNameError,
)

logger = logging.getLogger(__name__)

Constants = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

BUILTIN_NAMES = ("rational", "complex", "quaternion", "octonion", "matrix2", "zero1")


@dataclass(frozen=True)
class Algebra:
    """Algebra over the rationals described by dense structural constants"""

    name: str
    dim: int
    basis_labels: Tuple[str, ...]
    constants: Constants
    unit_index: Optional[int] = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise InvalidAlgebraError(f"Algebra {self.name!r} must have dimension >= 1")
        if len(self.basis_labels) != n:
            raise InvalidAlgebraError(
                f"Algebra {self.name!r} has {len(self.basis_labels)} labels for dimension {n}"
            )
        if len(set(self.basis_labels)) != n:
            raise InvalidAlgebraError(f"Algebra {self.name!r} repeats a basis label")
        if len(self.constants) != n or any(
            len(row) != n or any(len(cell) != n for cell in row)
            for row in self.constants
        ):
            raise InvalidAlgebraError(
                f"Structure constants of {self.name!r} are not {n}x{n}x{n}"
            )
        if self.unit_index is not None:
            u = self.unit_index
            if not 0 <= u < n:
                raise InvalidAlgebraError(f"Unit index {u} out of range")
            for j in range(n):
                expected = tuple(Fraction(int(k == j)) for k in range(n))
                if self.constants[u][j] != expected or self.constants[j][u] != expected:
                    raise InvalidAlgebraError(
                        f"Basis vector {self.basis_labels[u]!r} of {self.name!r} "
                        f"is not a unit (fails against {self.basis_labels[j]!r})"
                    )

    @classmethod
    def from_entries(
        cls,
        name: str,
        labels: Sequence[str],
        entries: Iterable[Tuple[int, int, int, RationalLike]],
        unit_index: Optional[int] = None,
    ) -> "Algebra":
        """Build from sparse (i, j, k, c) entries; omitted triples are zero"""
        n = len(labels)
        table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        seen = set()
        for i, j, k, c in entries:
            if not all(0 <= x < n for x in (i, j, k)):
                raise InvalidAlgebraError(f"Index triple ({i}, {j}, {k}) out of range")
            if (i, j, k) in seen:
                raise InvalidAlgebraError(f"Duplicate constant for ({i}, {j}, {k})")
            seen.add((i, j, k))
            table[i][j][k] = to_rational(c)
        return cls(
            name=name,
            dim=n,
            basis_labels=tuple(labels),
            constants=tuple(tuple(tuple(cell) for cell in row) for row in table),
            unit_index=unit_index,
        )

    def entries(self) -> List[Tuple[int, int, int, Fraction]]:
        """Nonzero constants as sparse (i, j, k, c) entries"""
        return [
            (i, j, k, c)
            for i, row in enumerate(self.constants)
            for j, cell in enumerate(row)
            for k, c in enumerate(cell)
            if c != 0
        ]

    @cached_property
    def _products(self) -> Tuple[Tuple[Tuple[Tuple[int, Fraction], ...], ...], ...]:
        return tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(cell) if c != 0) for cell in row
            )
            for row in self.constants
        )

    def multiply_coords(
        self, a: Sequence[Fraction], b: Sequence[Fraction]
    ) -> Tuple[Fraction, ...]:
        """(ab)^k = C_ij^k a^i b^j"""
        out = [Fraction(0)] * self.dim
        products = self._products
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = products[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                w = ai * bj
                for k, c in row[j]:
                    out[k] += c * w
        return tuple(out)

    def element(self, coords: Sequence[RationalLike]) -> "AlgElem":
        return AlgElem(self, tuple(to_rational(c) for c in coords))

    def basis_element(self, i: int) -> "AlgElem":
        return AlgElem(self, tuple(Fraction(int(k == i)) for k in range(self.dim)))

    def basis(self) -> List["AlgElem"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def parse_element(self, text: str) -> "AlgElem":
        """Parse the coordinate string "c0,c1,...,c(n-1)" """
        parts = [p for p in text.split(",")]
        if len(parts) != self.dim:
            raise DimensionMismatchError(
                f"Element {text!r} has {len(parts)} coordinates, {self.name} needs {self.dim}"
            )
        return AlgElem(self, tuple(parse_rational(p) for p in parts))

    @cached_property
    def zero(self) -> "AlgElem":
        return AlgElem(self, (Fraction(0),) * self.dim)

    @cached_property
    def unit(self) -> Optional["AlgElem"]:
        """The two-sided unit, found by solving u·e_j = e_j = e_j·u"""
        if self.unit_index is not None:
            return self.basis_element(self.unit_index)
        n = self.dim
        rows = []
        rhs = []
        for j in range(n):
            for k in range(n):
                rows.append([self.constants[i][j][k] for i in range(n)])
                rows.append([self.constants[j][i][k] for i in range(n)])
                rhs.extend([Fraction(int(j == k))] * 2)
        result = solve_linear(DMatrix.from_rows(rows, cols=n), DMatrix.column_vector(rhs))
        if isinstance(result, Unique):
            return AlgElem(self, result.solution)
        return None

    @property
    def one(self) -> "AlgElem":
        if self.unit is None:
            raise InvalidAlgebraError(f"Algebra {self.name!r} has no unit")
        return self.unit

    @cached_property
    def is_commutative(self) -> bool:
        n = self.dim
        return all(
            self.constants[i][j] == self.constants[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    @cached_property
    def is_associative(self) -> bool:
        return next(self.nonassociative_triples(), None) is None

    def nonassociative_triples(self):
        """Basis index triples with nonzero associator, in lexicographic order"""
        basis = self.basis()
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                ab = a * b
                for k, c in enumerate(basis):
                    if ab * c != a * (b * c):
                        yield (i, j, k)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class AlgElem:
    """A-number a = a^i e_i"""

    algebra: Algebra = field(repr=False)
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise DimensionMismatchError(
                f"{len(self.coords)} coordinates for {self.algebra.name} of dimension {self.algebra.dim}"
            )

    def _check(self, other: "AlgElem"):
        if not isinstance(other, AlgElem):
            raise TypeError(f"Expected an algebra element, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatchError(
                f"Elements of {self.algebra.name} and {other.algebra.name} cannot be combined"
            )

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        return AlgElem(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        return AlgElem(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        # rationals are central
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, d: RationalLike) -> "AlgElem":
        d = to_rational(d)
        return AlgElem(self.algebra, tuple(d * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def conjugate(self) -> "AlgElem":
        """Negate every coordinate except the unit one"""
        u = self.algebra.unit_index
        if u is None:
            raise InvalidAlgebraError(
                f"Conjugation needs a unit basis vector in {self.algebra.name}"
            )
        return AlgElem(
            self.algebra, tuple(a if i == u else -a for i, a in enumerate(self.coords))
        )

    def to_coord_string(self) -> str:
        return ",".join(format_rational(c) for c in self.coords)

    def __str__(self):
        parts = []
        for c, label in zip(self.coords, self.algebra.basis_labels):
            if c == 0:
                continue
            if label == "1":
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{format_rational(c)}*{label}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def _check_same(*elems: AlgElem):
    first = elems[0]
    for other in elems[1:]:
        first._check(other)


def mul(a: AlgElem, b: AlgElem) -> AlgElem:
    """Product per the structural constants"""
    _check_same(a, b)
    return AlgElem(a.algebra, a.algebra.multiply_coords(a.coords, b.coords))


def commutator(a: AlgElem, b: AlgElem) -> AlgElem:
    """[a, b] = ab - ba"""
    return mul(a, b) - mul(b, a)


def associator(a: AlgElem, b: AlgElem, c: AlgElem) -> AlgElem:
    """(a, b, c) = (ab)c - a(bc)"""
    _check_same(a, b, c)
    return mul(mul(a, b), c) - mul(a, mul(b, c))


@dataclass(frozen=True)
class Classification:
    """Structural flags of an algebra"""

    commutative: bool
    associative: bool
    nucleus_dim: int
    center_dim: int
    has_unit: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "commutative": self.commutative,
            "associative": self.associative,
            "nucleus_dim": self.nucleus_dim,
            "center_dim": self.center_dim,
            "has_unit": self.has_unit,
        }


def _condition_rows(algebra: Algebra, conditions) -> List[List[Fraction]]:
    """Rows of the linear system obtained by evaluating each condition at a = e_i"""
    basis = algebra.basis()
    columns = [[] for _ in basis]
    for i, a in enumerate(basis):
        for cond in conditions:
            for value in cond(a):
                columns[i].extend(value.coords)
    nrows = len(columns[0])
    return [[columns[i][r] for i in range(len(basis))] for r in range(nrows)]


def classify(algebra: Algebra) -> Classification:
    """Commutativity, associativity, nucleus and center dimensions"""
    basis = algebra.basis()

    def left(a):
        return [associator(a, x, y) for x in basis for y in basis]

    def middle(a):
        return [associator(x, a, y) for x in basis for y in basis]

    def right(a):
        return [associator(x, y, a) for x in basis for y in basis]

    def commuting(a):
        return [commutator(a, x) for x in basis]

    nucleus_rows = _condition_rows(algebra, [left, middle, right])
    nucleus_dim = algebra.dim - rank(DMatrix.from_rows(nucleus_rows, cols=algebra.dim))
    center_rows = nucleus_rows + _condition_rows(algebra, [commuting])
    center_dim = algebra.dim - rank(DMatrix.from_rows(center_rows, cols=algebra.dim))

    result = Classification(
        commutative=algebra.is_commutative,
        associative=algebra.is_associative,
        nucleus_dim=nucleus_dim,
        center_dim=center_dim,
        has_unit=algebra.unit is not None,
    )
    logger.debug(f"Classified {algebra.name}: {result}")
    return result


def _fresh_unit_label(labels: Sequence[str]) -> str:
    if "1" not in labels:
        return "1"
    label, n = "u", 0
    while label in labels:
        n += 1
        label = f"u{n}"
    return label


def unital_extension(algebra: Algebra) -> Algebra:
    """A itself when it has a unit, otherwise A ⊕ D with (a+n)(b+m) = (ab+ma+nb)+nm"""
    if algebra.unit is not None:
        return algebra
    n = algebra.dim
    entries = [(i, j, k, c) for i, j, k, c in algebra.entries()]
    # adjoined unit sits at index n
    for j in range(n):
        entries.append((n, j, j, 1))
        entries.append((j, n, j, 1))
    entries.append((n, n, n, 1))
    label = _fresh_unit_label(algebra.basis_labels)
    return Algebra.from_entries(
        name=f"{algebra.name}(1)",
        labels=list(algebra.basis_labels) + [label],
        entries=entries,
        unit_index=n,
    )


def embed_in_extension(a: AlgElem, extension: Algebra) -> AlgElem:
    """Image of a under A -> A(1); identity when A already has a unit"""
    if extension is a.algebra or extension == a.algebra:
        return a
    pad = (Fraction(0),) * (extension.dim - a.algebra.dim)
    return AlgElem(extension, a.coords + pad)


def left_regular(a: AlgElem) -> DMatrix:
    """L(a) with L(a)·coords(x) = coords(a·x)"""
    alg = a.algebra
    n = alg.dim
    c = alg.constants
    return DMatrix.from_rows(
        [
            [sum((a.coords[i] * c[i][j][k] for i in range(n)), Fraction(0)) for j in range(n)]
            for k in range(n)
        ],
        cols=n,
    )


def right_regular(a: AlgElem) -> DMatrix:
    """R(a) with R(a)·coords(x) = coords(x·a)"""
    alg = a.algebra
    n = alg.dim
    c = alg.constants
    return DMatrix.from_rows(
        [
            [sum((a.coords[i] * c[j][i][k] for i in range(n)), Fraction(0)) for j in range(n)]
            for k in range(n)
        ],
        cols=n,
    )


def map_element(f: DMatrix, a: AlgElem, target: Algebra) -> AlgElem:
    """Image of a under the linear map with matrix f (columns = images of e_i)"""
    if f.cols != a.algebra.dim or f.rows != target.dim:
        raise DimensionMismatchError(
            f"Map of shape {f.shape} cannot send {a.algebra.name} to {target.name}"
        )
    return AlgElem(target, f.apply(a.coords))


def check_algebra_hom(f: DMatrix, source: Algebra, target: Algebra) -> bool:
    """f(e_i e_j) = f(e_i) f(e_j) for every basis pair"""
    if f.cols != source.dim or f.rows != target.dim:
        raise DimensionMismatchError(
            f"Expected a {target.dim}x{source.dim} matrix, got {f.rows}x{f.cols}"
        )
    images = [map_element(f, e, target) for e in source.basis()]
    for i, ei in enumerate(source.basis()):
        for j, ej in enumerate(source.basis()):
            if map_element(f, ei * ej, target) != images[i] * images[j]:
                logger.debug(f"Homomorphism condition fails on ({i}, {j})")
                return False
    return True


def multiplication_table(algebra: Algebra) -> List[List[str]]:
    basis = algebra.basis()
    return [[str(a * b) for b in basis] for a in basis]


def cayley_dickson(base: Algebra, name: str, labels: Sequence[str]) -> Algebra:
    """Double base with (x, y)(u, v) = (xu - v̄y, vx + yū)"""
    if base.unit_index != 0:
        raise InvalidAlgebraError("Cayley-Dickson doubling needs the unit at index 0")
    n = base.dim
    zero = base.zero

    def half(p: int) -> Tuple[AlgElem, AlgElem]:
        if p < n:
            return base.basis_element(p), zero
        return zero, base.basis_element(p - n)

    entries = []
    for p in range(2 * n):
        x, y = half(p)
        for q in range(2 * n):
            u, v = half(q)
            first = x * u - v.conjugate() * y
            second = v * x + y * u.conjugate()
            for k, c in enumerate(first.coords + second.coords):
                if c != 0:
                    entries.append((p, q, k, c))
    return Algebra.from_entries(name, labels, entries, unit_index=0)


def _matrix_units() -> Algebra:
    labels = ["E11", "E12", "E21", "E22"]
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    entries = []
    for p, (a, b) in enumerate(units):
        for q, (c, d) in enumerate(units):
            # E_ab E_cd = δ_bc E_ad
            if b == c:
                entries.append((p, q, units.index((a, d)), 1))
    return Algebra.from_entries("matrix2", labels, entries)


@lru_cache(maxsize=None)
def load_builtin(name: str) -> Algebra:
    """Built-in algebras; the hypercomplex ones come from repeated doubling"""
    if name == "rational":
        return Algebra.from_entries("rational", ["1"], [(0, 0, 0, 1)], unit_index=0)
    if name == "complex":
        return cayley_dickson(load_builtin("rational"), "complex", ["1", "i"])
    if name == "quaternion":
        return cayley_dickson(load_builtin("complex"), "quaternion", ["1", "i", "j", "k"])
    if name == "octonion":
        return cayley_dickson(
            load_builtin("quaternion"), "octonion", ["1"] + [f"e{i}" for i in range(1, 8)]
        )
    if name == "matrix2":
        return _matrix_units()
    if name == "zero1":
        return Algebra.from_entries("zero1", ["eps"], [])
    raise UnknownNameError(
        f"Unknown algebra {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}"
    )
