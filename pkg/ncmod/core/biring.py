"""
Biring of matrices over an arbitrary carrier

Entries may come from any carrier whose values support +, -, * and
unary minus and which exposes `zero` and `one`: rationals and algebra
elements both qualify. Entry a^i_j sits at entries[i][j], the upper
index naming the row.

rc_product:  (a ★ b)^i_j = Σ_k a^i_k · b^k_j   (row of a over column of b)
cr_product:  (a ★ b)^i_j = Σ_k a^k_j · b^i_k   (column of a over row of b)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Generic, Optional, Protocol, Sequence, Tuple, TypeVar, Union, runtime_checkable

from ncmod.core.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

T = TypeVar("T")


@runtime_checkable
class Carrier(Protocol):
    """Source of the additive and multiplicative identities for matrix entries"""

    name: str

    @property
    def zero(self) -> Any: ...

    @property
    def one(self) -> Any: ...


class RationalCarrier:
    """The commutative carrier of rationals"""

    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "RATIONALS"


RATIONALS = RationalCarrier()


@dataclass(frozen=True)
class GenMatrix(Generic[T]):
    """Rectangular table of carrier values"""

    rows: int
    cols: int
    entries: Tuple[Tuple[T, ...], ...]
    carrier: Carrier = RATIONALS

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("Matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise DimensionMismatchError(
                f"Entries do not form a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[T]], carrier: Carrier = RATIONALS, cols: Optional[int] = None) -> "GenMatrix":
        data = tuple(tuple(row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data, carrier)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> T:
        i, j = index
        return self.entries[i][j]

    def map_entries(self, func: Callable[[T], Any], carrier: Optional[Carrier] = None) -> "GenMatrix":
        return GenMatrix(
            self.rows,
            self.cols,
            tuple(tuple(func(x) for x in row) for row in self.entries),
            self.carrier if carrier is None else carrier,
        )

    def __add__(self, other: "GenMatrix") -> "GenMatrix":
        return mat_sum(self, other)

    def __neg__(self) -> "GenMatrix":
        return self.map_entries(lambda x: -x)

    def __sub__(self, other: "GenMatrix") -> "GenMatrix":
        return mat_sum(self, -other)

    def __eq__(self, other):
        if not isinstance(other, GenMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        zero = self.carrier.zero
        return all(x == zero for row in self.entries for x in row)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries) + "]"


def zeros(rows: int, cols: int, carrier: Carrier = RATIONALS) -> GenMatrix:
    z = carrier.zero
    return GenMatrix(rows, cols, tuple((z,) * cols for _ in range(rows)), carrier)


def identity(n: int, carrier: Carrier = RATIONALS) -> GenMatrix:
    """Common identity of both products"""
    z, o = carrier.zero, carrier.one
    return GenMatrix(
        n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), carrier
    )


def _dot(pairs, zero):
    total = zero
    for x, y in pairs:
        total = total + x * y
    return total


def rc_product(a: GenMatrix, b: GenMatrix) -> GenMatrix:
    """Σ_k a^i_k · b^k_j"""
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"rc-product needs a.cols == b.rows, got {a.shape} and {b.shape}"
        )
    zero = a.carrier.zero
    return GenMatrix(
        a.rows,
        b.cols,
        tuple(
            tuple(
                _dot(((a.entries[i][k], b.entries[k][j]) for k in range(a.cols)), zero)
                for j in range(b.cols)
            )
            for i in range(a.rows)
        ),
        a.carrier,
    )


def cr_product(a: GenMatrix, b: GenMatrix) -> GenMatrix:
    """Σ_k a^k_j · b^i_k, the a-factor written first"""
    if a.rows != b.cols:
        raise DimensionMismatchError(
            f"cr-product needs a.rows == b.cols, got {a.shape} and {b.shape}"
        )
    zero = a.carrier.zero
    return GenMatrix(
        b.rows,
        a.cols,
        tuple(
            tuple(
                _dot(((a.entries[k][j], b.entries[i][k]) for k in range(a.rows)), zero)
                for j in range(a.cols)
            )
            for i in range(b.rows)
        ),
        a.carrier,
    )


def transpose(a: GenMatrix) -> GenMatrix:
    return GenMatrix(
        a.cols,
        a.rows,
        tuple(tuple(a.entries[i][j] for i in range(a.rows)) for j in range(a.cols)),
        a.carrier,
    )


def mat_sum(a: GenMatrix, b: GenMatrix) -> GenMatrix:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"Cannot add {a.shape} and {b.shape} matrices")
    return GenMatrix(
        a.rows,
        a.cols,
        tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(a.entries, b.entries)),
        a.carrier,
    )


# Matrix expressions


@dataclass(frozen=True)
class Leaf:
    matrix: GenMatrix


@dataclass(frozen=True)
class Transpose:
    expr: "MatExpr"


@dataclass(frozen=True)
class Rc:
    left: "MatExpr"
    right: "MatExpr"


@dataclass(frozen=True)
class Cr:
    left: "MatExpr"
    right: "MatExpr"


@dataclass(frozen=True)
class Sum:
    left: "MatExpr"
    right: "MatExpr"


MatExpr = Union[Leaf, Transpose, Rc, Cr, Sum]


def shape(expr: MatExpr) -> Tuple[int, int]:
    """Shape of the value of expr; raises on the first incompatible node"""
    if isinstance(expr, Leaf):
        return expr.matrix.shape
    if isinstance(expr, Transpose):
        r, c = shape(expr.expr)
        return (c, r)
    left, right = shape(expr.left), shape(expr.right)
    if isinstance(expr, Rc):
        if left[1] != right[0]:
            raise DimensionMismatchError(f"rc-product of {left} and {right}")
        return (left[0], right[1])
    if isinstance(expr, Cr):
        if left[0] != right[1]:
            raise DimensionMismatchError(f"cr-product of {left} and {right}")
        return (right[0], left[1])
    if isinstance(expr, Sum):
        if left != right:
            raise DimensionMismatchError(f"sum of {left} and {right}")
        return left
    raise TypeError(f"Not a matrix expression: {expr!r}")


def _evaluate(expr: MatExpr) -> GenMatrix:
    if isinstance(expr, Leaf):
        return expr.matrix
    if isinstance(expr, Transpose):
        return transpose(_evaluate(expr.expr))
    left, right = _evaluate(expr.left), _evaluate(expr.right)
    if isinstance(expr, Rc):
        return rc_product(left, right)
    if isinstance(expr, Cr):
        return cr_product(left, right)
    return mat_sum(left, right)


def evaluate(expr: MatExpr) -> GenMatrix:
    """Bottom-up evaluation after a full shape check"""
    shape(expr)
    return _evaluate(expr)


def dualize(expr: MatExpr) -> MatExpr:
    """Transpose every leaf and swap rc with cr; evaluates to the transpose of expr"""
    if isinstance(expr, Leaf):
        return Leaf(transpose(expr.matrix))
    if isinstance(expr, Transpose):
        return Transpose(dualize(expr.expr))
    if isinstance(expr, Rc):
        return Cr(dualize(expr.left), dualize(expr.right))
    if isinstance(expr, Cr):
        return Rc(dualize(expr.left), dualize(expr.right))
    if isinstance(expr, Sum):
        return Sum(dualize(expr.left), dualize(expr.right))
    raise TypeError(f"Not a matrix expression: {expr!r}")


def depth(expr: MatExpr) -> int:
    if isinstance(expr, Leaf):
        return 1
    if isinstance(expr, Transpose):
        return 1 + depth(expr.expr)
    return 1 + max(depth(expr.left), depth(expr.right))


def render(expr: MatExpr) -> str:
    """Compact prefix form, e.g. rc(T([[i, 0], [0, 1]]), [[...]])"""
    if isinstance(expr, Leaf):
        return str(expr.matrix)
    if isinstance(expr, Transpose):
        return f"T({render(expr.expr)})"
    tag = {Rc: "rc", Cr: "cr", Sum: "sum"}[type(expr)]
    return f"{tag}({render(expr.left)}, {render(expr.right)})"
