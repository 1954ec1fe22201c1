"""
Exact arithmetic over the rationals

Fractions are the scalars D of every module in the toolkit. This module
holds the dense rational matrix type, Gaussian elimination (solving,
rank, nullspace) and permutation parity.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ncmod.core.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" with integer p and positive integer q"""
    body = text.strip()
    num, sep, den = body.partition("/")
    try:
        numerator = int(num)
        denominator = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"Not a rational: {text!r}") from None
    if denominator <= 0:
        raise ValueError(f"Denominator must be positive: {text!r}")
    return Fraction(numerator, denominator)


def is_canonical_rational(text: str) -> bool:
    """True when text is exactly the canonical form of the value it denotes"""
    try:
        return format_rational(parse_rational(text)) == text
    except ValueError:
        return False


def format_rational(value: Fraction) -> str:
    """Canonical "p" / "p/q" form"""
    return str(value)


@dataclass(frozen=True)
class DMatrix:
    """Dense rectangular matrix of rationals, entries[row][col]"""

    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

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
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "DMatrix":
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "DMatrix":
        data = tuple(
            tuple(to_rational(col[r]) for col in columns) for r in range(rows)
        )
        return cls(rows, len(columns), data)

    @classmethod
    def column_vector(cls, values: Sequence[RationalLike]) -> "DMatrix":
        return cls.from_rows([[v] for v in values], cols=1)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DMatrix":
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "DMatrix":
        return cls(
            n,
            n,
            tuple(
                tuple(Fraction(1) if r == c else Fraction(0) for c in range(n))
                for r in range(n)
            ),
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "DMatrix":
        return DMatrix(
            self.cols,
            self.rows,
            tuple(self.column(j) for j in range(self.cols)),
        )

    def apply(self, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Matrix times column vector given as a flat sequence"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} against {self.cols} columns"
            )
        return tuple(
            sum((a * x for a, x in zip(row, vector) if a and x), Fraction(0))
            for row in self.entries
        )

    def __matmul__(self, other: "DMatrix") -> "DMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = [other.column(j) for j in range(other.cols)]
        return DMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, col) if a and b), Fraction(0))
                    for col in other_cols
                )
                for row in self.entries
            ),
        )

    def _check_same_shape(self, other: "DMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: "DMatrix") -> "DMatrix":
        self._check_same_shape(other)
        return DMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self) -> "DMatrix":
        return DMatrix(
            self.rows, self.cols, tuple(tuple(-a for a in row) for row in self.entries)
        )

    def __sub__(self, other: "DMatrix") -> "DMatrix":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(a) for a in row] for row in self.entries]


@dataclass(frozen=True)
class Unique:
    """Exactly one solution"""

    solution: Tuple[Fraction, ...]


@dataclass(frozen=True)
class NoSolution:
    """Inconsistent system"""


@dataclass(frozen=True)
class Infinite:
    """Particular solution plus a basis of the homogeneous solutions"""

    particular: Tuple[Fraction, ...]
    nullspace_basis: Tuple[Tuple[Fraction, ...], ...]


Solution = Union[Unique, NoSolution, Infinite]


def _row_reduce(rows: List[List[Fraction]], ncols: int) -> List[Tuple[int, int]]:
    """Reduce rows in place to reduced row echelon form over the first ncols.

    Pivot choice is the first nonzero entry of each column, scanning rows
    top-down, so the output is deterministic. Returns (row, col) pivots.
    """
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        sel = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None
        )
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        pivot = rows[pivot_row][col]
        if pivot != 1:
            rows[pivot_row] = [x / pivot for x in rows[pivot_row]]
        lead = rows[pivot_row]
        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], lead)]
        pivots.append((pivot_row, col))
        pivot_row += 1
    return pivots


def _nullspace_from_rref(
    rows: List[List[Fraction]], pivots: List[Tuple[int, int]], ncols: int
) -> Tuple[Tuple[Fraction, ...], ...]:
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, c in pivots:
            vec[c] = -rows[r][free]
        basis.append(tuple(vec))
    return tuple(basis)


def solve_linear(a: DMatrix, b: DMatrix) -> Solution:
    """Solve a·x = b exactly for a column b"""
    if b.cols != 1:
        raise DimensionMismatchError(f"Right-hand side must be a column, got {b.shape}")
    if a.rows != b.rows:
        raise DimensionMismatchError(
            f"Matrix has {a.rows} rows but right-hand side has {b.rows}"
        )
    augmented = [list(row) + [rhs[0]] for row, rhs in zip(a.entries, b.entries)]
    pivots = _row_reduce(augmented, a.cols)
    rank_a = len(pivots)

    # a zero row with nonzero right-hand side means no solution
    for row in augmented[rank_a:]:
        if row[a.cols] != 0:
            logger.debug(f"Inconsistent system, rank {rank_a}")
            return NoSolution()

    particular = [Fraction(0)] * a.cols
    for r, c in pivots:
        particular[c] = augmented[r][a.cols]

    if rank_a == a.cols:
        return Unique(tuple(particular))
    return Infinite(
        tuple(particular), _nullspace_from_rref(augmented, pivots, a.cols)
    )


def rank(a: DMatrix) -> int:
    """Row rank over the rationals"""
    rows = [list(row) for row in a.entries]
    return len(_row_reduce(rows, a.cols))


def nullspace(a: DMatrix) -> Tuple[Tuple[Fraction, ...], ...]:
    """Deterministic basis of {x : a·x = 0}"""
    rows = [list(row) for row in a.entries]
    pivots = _row_reduce(rows, a.cols)
    return _nullspace_from_rref(rows, pivots, a.cols)


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0..n-1} given by its image sequence"""

    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"Not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def of(cls, image: Iterable[int]) -> "Permutation":
        return cls(tuple(image))

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self ∘ other)(i) = self(other(i))"""
        if len(self) != len(other):
            raise DimensionMismatchError("Permutations act on sets of different size")
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        img = self.image
        return sum(
            1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j]
        )


def parity(p: Permutation) -> int:
    """+1 for even permutations, -1 for odd ones"""
    return -1 if p.inversions() % 2 else 1
