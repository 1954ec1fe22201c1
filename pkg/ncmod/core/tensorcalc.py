"""
Tensor action of A⊗A on A and noncommutative differentiation

(a ⊗ b) ∘ c = (a·c)·b. Composition (p0 ⊗ p1) ∘ (q0 ⊗ q1) = p0q0 ⊗ q1p1 makes
this a left representation of A⊗A only when A is associative, so every
tensor operation refuses nonassociative algebras. Two tensors are equal
when they induce the same rational map on A.

The partial derivative of a polynomial with respect to x has one term
prefix ⊗ suffix per occurrence of x in each word. Empty prefixes and
suffixes stand for the unit, so over an algebra without one they are
evaluated in its unital extension A(1); A is an ideal there and values
applied to elements of A project back.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ncmod.core.algebra import Algebra, AlgElem, embed_in_extension, unital_extension
from ncmod.core.exact import DMatrix, RationalLike, format_rational, to_rational
from ncmod.core.exceptions import (
    AlgebraMismatchError,
    DimensionMismatchError,
    NonAssociativeAlgebraError,
    UnknownNameError,
)
from ncmod.core.ncpoly import NCPoly, Word, evaluate_word, format_word

logger = logging.getLogger(__name__)

TensorTerm = Tuple[Fraction, AlgElem, AlgElem]


def require_associative(algebra: Algebra):
    if not algebra.is_associative:
        raise NonAssociativeAlgebraError(
            f"Tensor action needs an associative algebra; {algebra.name} is not"
        )


def _lift(algebra: Algebra, elements: Sequence[AlgElem]) -> Tuple[Algebra, List[AlgElem]]:
    """Move elements into A(1), which is A itself when A has a unit"""
    extension = unital_extension(algebra)
    return extension, [embed_in_extension(x, extension) for x in elements]


def _restrict(x: AlgElem, algebra: Algebra) -> AlgElem:
    if x.algebra is algebra:
        return x
    return AlgElem(algebra, x.coords[: algebra.dim])


@dataclass(frozen=True)
class Tensor:
    """Formal sum of scale·(a ⊗ b)"""

    algebra: Algebra
    terms: Tuple[TensorTerm, ...]

    def __post_init__(self):
        for _, a, b in self.terms:
            for x in (a, b):
                if x.algebra is not self.algebra and x.algebra != self.algebra:
                    raise AlgebraMismatchError(
                        f"Tensor factor in {x.algebra.name} inside a {self.algebra.name} tensor"
                    )
        kept = tuple(
            (s, a, b) for s, a, b in self.terms if s != 0 and not a.is_zero() and not b.is_zero()
        )
        object.__setattr__(self, "terms", kept)

    @classmethod
    def simple(cls, a: AlgElem, b: AlgElem, scale: RationalLike = 1) -> "Tensor":
        return cls(a.algebra, ((to_rational(scale), a, b),))

    @classmethod
    def identity(cls, algebra: Algebra) -> "Tensor":
        return cls.simple(algebra.one, algebra.one)

    def __add__(self, other: "Tensor") -> "Tensor":
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatchError("Tensors over different algebras")
        return Tensor(self.algebra, self.terms + other.terms)

    def scale(self, d: RationalLike) -> "Tensor":
        d = to_rational(d)
        return Tensor(self.algebra, tuple((d * s, a, b) for s, a, b in self.terms))

    def __neg__(self) -> "Tensor":
        return self.scale(-1)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(s)}·({a} ⊗ {b})" for s, a, b in self.terms)


def identity_tensor(algebra: Algebra) -> Tensor:
    return Tensor.identity(algebra)


def tensor_apply(t: Tensor, c: AlgElem) -> AlgElem:
    """Σ scale·(a·c)·b"""
    require_associative(t.algebra)
    if c.algebra is not t.algebra and c.algebra != t.algebra:
        raise AlgebraMismatchError(f"Argument in {c.algebra.name}, tensor over {t.algebra.name}")
    total = t.algebra.zero
    for s, a, b in t.terms:
        total = total + ((a * c) * b).scale(s)
    return total


def tensor_compose(s: Tensor, t: Tensor) -> Tensor:
    """(p0 ⊗ p1) ∘ (q0 ⊗ q1) = (p0·q0) ⊗ (q1·p1), extended bilinearly"""
    require_associative(s.algebra)
    if t.algebra is not s.algebra and t.algebra != s.algebra:
        raise AlgebraMismatchError("Tensors over different algebras")
    terms = []
    for ps, p0, p1 in s.terms:
        for qs, q0, q1 in t.terms:
            terms.append((ps * qs, p0 * q0, q1 * p1))
    return Tensor(s.algebra, tuple(terms))


def tensor_to_map(t: Tensor) -> DMatrix:
    """Rational matrix M with M·coords(c) = coords(t ∘ c)"""
    require_associative(t.algebra)
    columns = [tensor_apply(t, e).coords for e in t.algebra.basis()]
    return DMatrix.from_columns(columns, rows=t.algebra.dim)


def tensors_equal(s: Tensor, t: Tensor) -> bool:
    return tensor_to_map(s) == tensor_to_map(t)


@dataclass(frozen=True)
class TensorPoly:
    """Formal sum of scale·(prefix ⊗ suffix) with symbolic words"""

    variables: Tuple[str, ...]
    terms: Tuple[Tuple[Fraction, Word, Word], ...]

    def evaluate(self, point: Sequence[AlgElem]) -> Tensor:
        """Tensor over the point's algebra, or over A(1) when A has no unit"""
        if not point:
            raise DimensionMismatchError("Empty point")
        if len(point) != len(self.variables):
            raise DimensionMismatchError(
                f"Point has {len(point)} entries for variables {self.variables}"
            )
        carrier, lifted = _lift(point[0].algebra, point)
        one = carrier.one
        return Tensor(
            carrier,
            tuple(
                (s, evaluate_word(pre, lifted, one), evaluate_word(suf, lifted, one))
                for s, pre, suf in self.terms
            ),
        )

    def term_strings(self) -> List[str]:
        return [
            f"{format_rational(s)}·({format_word(self.variables, pre)} ⊗ {format_word(self.variables, suf)})"
            for s, pre, suf in self.terms
        ]

    def __str__(self):
        return " + ".join(self.term_strings()) if self.terms else "0"


def _variable_index(p: NCPoly, var: str) -> int:
    if var not in p.variables:
        raise UnknownNameError(f"Unknown variable {var!r}; variables are {', '.join(p.variables)}")
    return p.variables.index(var)


def differentiate(p: NCPoly, var: str) -> TensorPoly:
    """One prefix ⊗ suffix term per occurrence of var, words in source order"""
    index = _variable_index(p, var)
    terms = []
    for word, c in p.source_terms():
        for pos, letter in enumerate(word):
            if letter == index:
                terms.append((c, word[:pos], word[pos + 1:]))
    return TensorPoly(p.variables, tuple(terms))


def jacobian(maps: Sequence[NCPoly]) -> List[List[TensorPoly]]:
    """Partial derivatives, rows = map components, columns = variables"""
    if not maps:
        raise DimensionMismatchError("Empty map")
    variables = maps[0].variables
    for p in maps:
        if p.variables != variables:
            raise DimensionMismatchError("Map components use different variables")
    return [[differentiate(p, v) for v in variables] for p in maps]


def differential(p: NCPoly) -> str:
    """dp written with the displacements in place, e.g. dx*x*y^3 + x*dx*y^3"""
    parts = []
    for var in p.variables:
        for s, pre, suf in differentiate(p, var).terms:
            pieces = []
            if pre:
                pieces.append(format_word(p.variables, pre))
            pieces.append(f"d{var}")
            if suf:
                pieces.append(format_word(p.variables, suf))
            body = "*".join(pieces)
            parts.append(body if s == 1 else f"{format_rational(s)}*{body}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _check_point(
    maps: Sequence[NCPoly],
    variables: Optional[Sequence[str]],
    point: Sequence[AlgElem],
    displacement: Sequence[AlgElem],
) -> Algebra:
    if not maps:
        raise DimensionMismatchError("Empty map")
    names = tuple(variables) if variables is not None else maps[0].variables
    for p in maps:
        if p.variables != names:
            raise DimensionMismatchError(
                f"Map component over {p.variables}, expected {names}"
            )
    if len(point) != len(names) or len(displacement) != len(names):
        raise DimensionMismatchError(
            f"Point and displacement need {len(names)} entries, got {len(point)} and {len(displacement)}"
        )
    algebra = point[0].algebra
    for x in list(point) + list(displacement):
        if x.algebra is not algebra and x.algebra != algebra:
            raise AlgebraMismatchError("Point and displacement mix algebras")
    require_associative(algebra)
    return algebra


def jacobian_apply(
    maps: Sequence[NCPoly],
    variables: Optional[Sequence[str]],
    point: Sequence[AlgElem],
    displacement: Sequence[AlgElem],
) -> List[AlgElem]:
    """Component r is Σ_v (∂p_r/∂v at point) ∘ displacement_v"""
    algebra = _check_point(maps, variables, point, displacement)
    carrier, lifted = _lift(algebra, list(point) + list(displacement))
    at, steps = lifted[: len(point)], lifted[len(point):]
    result = []
    for row in jacobian(maps):
        total = carrier.zero
        for partial, h in zip(row, steps):
            total = total + tensor_apply(partial.evaluate(at), h)
        result.append(_restrict(total, algebra))
    return result


@dataclass(frozen=True)
class DualNumber:
    """u0 + u1·t with t² = 0 and t central"""

    value: AlgElem
    eps: AlgElem

    def __add__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.value + other.value, self.eps + other.eps)

    def __sub__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.value - other.value, self.eps - other.eps)

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.value, -self.eps)

    def __mul__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(
            self.value * other.value, self.value * other.eps + self.eps * other.value
        )

    def scale(self, d: RationalLike) -> "DualNumber":
        return DualNumber(self.value.scale(d), self.eps.scale(d))


def first_order(
    maps: Sequence[NCPoly],
    variables: Optional[Sequence[str]],
    point: Sequence[AlgElem],
    displacement: Sequence[AlgElem],
) -> List[AlgElem]:
    """t-coefficient of each map evaluated at point + t·displacement over A[t]/(t²)"""
    algebra = _check_point(maps, variables, point, displacement)
    carrier, lifted = _lift(algebra, list(point) + list(displacement))
    one = DualNumber(carrier.one, carrier.zero)
    dual_point = [DualNumber(x, h) for x, h in zip(lifted[: len(point)], lifted[len(point):])]
    return [_restrict(p.evaluate(dual_point, one).eps, algebra) for p in maps]
