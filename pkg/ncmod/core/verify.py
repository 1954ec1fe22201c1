"""
Seeded property suites for the ncmod kernel

Every suite checks algebraic laws on random inputs drawn from a splitmix64
stream. Trial t of a run with master seed s draws from split(s, t), so a
report depends only on (suite, algebra, trials, seed, dims) and not on how
trials are scheduled across workers.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ncmod.config import settings
from ncmod.core.algebra import (
    Algebra,
    AlgElem,
    associator,
    check_algebra_hom,
    classify,
    commutator,
    embed_in_extension,
    left_regular,
    load_builtin,
    right_regular,
    unital_extension,
)
from ncmod.core.amodule import (
    Basis,
    NonUnique,
    Orientation,
    OrientedVector,
    Shape,
    Side,
    UniqueCoordinates,
    certify,
    contract,
    coordinates,
    expand,
    extend_basis,
    in_span,
    is_generating_set,
    is_linearly_independent,
    is_quasibasis,
    standard_basis,
)
from ncmod.core.biring import (
    RATIONALS,
    Cr,
    GenMatrix,
    Leaf,
    MatExpr,
    Rc,
    Sum,
    Transpose,
    cr_product,
    dualize,
    evaluate,
    identity,
    mat_sum,
    rc_product,
    render,
    transpose,
)
from ncmod.core.exact import (
    DMatrix,
    NoSolution,
    Permutation,
    format_rational,
    parity,
    rank,
    solve_linear,
)
from ncmod.core.exceptions import (
    InvalidArgumentError,
    InvalidBasisError,
    NonAssociativeAlgebraError,
    UnknownNameError,
)
from ncmod.core.hom import (
    ModuleHom,
    apply,
    hom_compose,
    hom_neg,
    hom_sum,
    identity_hom,
)
from ncmod.core.ncpoly import NCPoly, parse_ncpoly
from ncmod.core.tensorcalc import (
    Tensor,
    differentiate,
    first_order,
    identity_tensor,
    jacobian_apply,
    tensor_apply,
    tensor_compose,
    tensor_to_map,
)
from ncmod.models.report import SuiteFailure, SuiteFinding, SuiteReport, VerificationSummary

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 generator; identical output on every platform"""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return _mix(self.state)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)"""
        if n <= 0:
            raise InvalidArgumentError(f"Cannot draw below {n}")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def choice(self, items: Sequence[Any]) -> Any:
        return items[self.below(len(items))]


def split(seed: int, index: int) -> int:
    """Sub-seed of trial `index` under master seed `seed`"""
    return _mix((seed ^ _mix((index + 1) * GAMMA & MASK64)) & MASK64)


# Generators


def gen_rational(prng: SplitMix64) -> Fraction:
    numerator = prng.randint(settings.coef_min, settings.coef_max)
    return Fraction(numerator, prng.choice(settings.denominators))


def gen_element(algebra: Algebra, prng: SplitMix64) -> AlgElem:
    return AlgElem(algebra, tuple(gen_rational(prng) for _ in range(algebra.dim)))


def gen_matrix(carrier: Any, rows: int, cols: int, prng: SplitMix64) -> GenMatrix:
    """Random matrix over an algebra, or over the rationals for RATIONALS"""
    if isinstance(carrier, Algebra):
        draw = lambda: gen_element(carrier, prng)  # noqa: E731
    else:
        draw = lambda: gen_rational(prng)  # noqa: E731
    return GenMatrix.from_rows(
        [[draw() for _ in range(cols)] for _ in range(rows)], carrier, cols=cols
    )


def gen_dmatrix(rows: int, cols: int, prng: SplitMix64) -> DMatrix:
    return DMatrix.from_rows(
        [[gen_rational(prng) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def gen_ncpoly(variables: Sequence[str], prng: SplitMix64) -> NCPoly:
    """At most max_poly_terms terms, words of length at most max_word_length"""
    mapping: Dict[Tuple[int, ...], Fraction] = {}
    for _ in range(prng.randint(1, settings.max_poly_terms)):
        length = prng.randint(0, settings.max_word_length)
        word = tuple(prng.below(len(variables)) for _ in range(length))
        mapping[word] = mapping.get(word, Fraction(0)) + gen_rational(prng)
    return NCPoly.from_mapping(variables, mapping)


def gen_vector(algebra: Algebra, orientation: Orientation, n: int, prng: SplitMix64) -> OrientedVector:
    return OrientedVector(algebra, orientation, tuple(gen_element(algebra, prng) for _ in range(n)))


def gen_basis(algebra: Algebra, orientation: Orientation, n: int, prng: SplitMix64, attempts: int = 8) -> Basis:
    """Random certified basis of Aⁿ; standard basis when every draw is degenerate"""
    for _ in range(attempts):
        candidate = Basis(
            orientation, tuple(gen_vector(algebra, orientation, n, prng) for _ in range(n))
        )
        try:
            return certify(candidate)
        except InvalidBasisError:
            continue
    logger.warning(f"No random basis of {algebra.name}^{n} certified, using the standard one")
    return standard_basis(algebra, orientation, n)


def gen_expr(algebra: Algebra, max_depth: int, prng: SplitMix64) -> MatExpr:
    """Random expression tree over 2x2 leaves, so every node is shape-consistent"""
    if max_depth <= 1 or prng.below(3) == 0:
        return Leaf(gen_matrix(algebra, 2, 2, prng))
    kind = prng.below(4)
    if kind == 0:
        return Transpose(gen_expr(algebra, max_depth - 1, prng))
    node = (Rc, Cr, Sum)[kind - 1]
    return node(gen_expr(algebra, max_depth - 1, prng), gen_expr(algebra, max_depth - 1, prng))


def gen_tensor(algebra: Algebra, prng: SplitMix64, max_terms: int = 3) -> Tensor:
    terms = []
    for _ in range(prng.randint(1, max_terms)):
        terms.append((gen_rational(prng), gen_element(algebra, prng), gen_element(algebra, prng)))
    return Tensor(algebra, tuple(terms))


def gen_permutation(n: int, prng: SplitMix64) -> Permutation:
    image = list(range(n))
    for i in range(n - 1, 0, -1):
        j = prng.below(i + 1)
        image[i], image[j] = image[j], image[i]
    return Permutation.of(image)


def gen_hom(algebra: Algebra, orientation: Orientation, target_dim: int, source_dim: int, prng: SplitMix64) -> ModuleHom:
    if orientation.shape is Shape.COLUMN:
        return ModuleHom(orientation, gen_matrix(algebra, target_dim, source_dim, prng))
    return ModuleHom(orientation, gen_matrix(algebra, source_dim, target_dim, prng))


def serialize(value: Any) -> Any:
    """JSON-friendly form of kernel values for failure reports"""
    if isinstance(value, AlgElem):
        return value.to_coord_string()
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, OrientedVector):
        return {"orientation": value.orientation.value, "comps": value.to_strings()}
    if isinstance(value, GenMatrix):
        return [[serialize(x) for x in row] for row in value.entries]
    if isinstance(value, DMatrix):
        return value.to_strings()
    if isinstance(value, ModuleHom):
        return {"orientation": value.orientation.value, "matrix": serialize(value.matrix)}
    if isinstance(value, (list, tuple)):
        return [serialize(x) for x in value]
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


# Suite machinery


@dataclass
class Outcome:
    """Failures, findings and observations gathered by one trial or fixed check"""

    failures: List[SuiteFailure] = field(default_factory=list)
    findings: List[SuiteFinding] = field(default_factory=list)
    observations: Dict[str, Any] = field(default_factory=dict)

    def check(self, law: str, ok: bool, detail: str = "", **inputs: Any) -> bool:
        if not ok:
            self.failures.append(
                SuiteFailure(
                    law=law,
                    inputs={k: serialize(v) for k, v in inputs.items()},
                    detail=detail,
                )
            )
        return ok

    def find(self, name: str, detail: str):
        self.findings.append(SuiteFinding(name=name, detail=detail))

    def extend(self, other: "Outcome"):
        self.failures.extend(other.failures)
        self.findings.extend(other.findings)


class PropertySuite:
    """One named family of laws

    Subclasses implement `trial` (seeded random checks) and may override
    `fixed` (deterministic checks run once) and `summarize` (checks across
    all trial observations).
    """

    name = ""
    needs_unit = False

    def fixed(self, algebra: Algebra, dims: Optional[int], out: Outcome):
        pass

    def trial(self, algebra: Algebra, prng: SplitMix64, index: int, dims: Optional[int], out: Outcome):
        raise NotImplementedError

    def summarize(self, algebra: Algebra, trials: List[Outcome], out: Outcome):
        pass


class BiringSuite(PropertySuite):
    name = "biring"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        n = dims or 3
        ident = identity(n, algebra)
        out.check("transpose-identity", transpose(ident) == ident, n=n)

    def trial(self, algebra, prng, index, dims, out):
        n = dims or 3
        a, b1, b2, c = (gen_matrix(algebra, n, n, prng) for _ in range(4))
        ident = identity(n, algebra)
        b = mat_sum(b1, b2)
        out.check("rc-left-distributive", rc_product(a, b) == rc_product(a, b1) + rc_product(a, b2), a=a, b1=b1, b2=b2)
        out.check("rc-right-distributive", rc_product(b, a) == rc_product(b1, a) + rc_product(b2, a), a=a, b1=b1, b2=b2)
        out.check("cr-left-distributive", cr_product(a, b) == cr_product(a, b1) + cr_product(a, b2), a=a, b1=b1, b2=b2)
        out.check("cr-right-distributive", cr_product(b, a) == cr_product(b1, a) + cr_product(b2, a), a=a, b1=b1, b2=b2)
        out.check("double-transpose", transpose(transpose(a)) == a, a=a)
        out.check(
            "transpose-rc",
            transpose(rc_product(a, c)) == cr_product(transpose(a), transpose(c)),
            a=a,
            c=c,
        )
        out.check(
            "transpose-cr",
            transpose(cr_product(a, c)) == rc_product(transpose(a), transpose(c)),
            a=a,
            c=c,
        )
        for label, product in (("rc", rc_product), ("cr", cr_product)):
            out.check(
                f"{label}-identity",
                product(ident, a) == a and product(a, ident) == a,
                a=a,
            )
        if algebra.is_associative:
            out.check(
                "rc-associative",
                rc_product(rc_product(a, b1), c) == rc_product(a, rc_product(b1, c)),
                a=a,
                b=b1,
                c=c,
            )
            out.check(
                "cr-associative",
                cr_product(cr_product(a, b1), c) == cr_product(a, cr_product(b1, c)),
                a=a,
                b=b1,
                c=c,
            )


class ReducibilitySuite(PropertySuite):
    name = "reducibility"

    def fixed(self, algebra, dims, out):
        if algebra.is_commutative:
            return
        # a noncommuting basis pair breaks reducibility for 1x1 matrices
        for i, x in enumerate(algebra.basis()):
            for j, y in enumerate(algebra.basis()):
                a = GenMatrix.from_rows([[x]], algebra)
                b = GenMatrix.from_rows([[y]], algebra)
                if rc_product(a, b) != cr_product(b, a):
                    out.find(
                        "reducibility-witness",
                        f"rc([{algebra.basis_labels[i]}], [{algebra.basis_labels[j]}]) "
                        f"differs from cr([{algebra.basis_labels[j]}], [{algebra.basis_labels[i]}])",
                    )
                    return
        out.check("reducibility-witness", False, "noncommutative algebra without a witness")

    def trial(self, algebra, prng, index, dims, out):
        r, s, t = (dims or prng.randint(1, 3) for _ in range(3))
        a = gen_matrix(RATIONALS, r, s, prng)
        b = gen_matrix(RATIONALS, s, t, prng)
        out.check("rational-reducibility", rc_product(a, b) == cr_product(b, a), a=a, b=b)
        if algebra.is_commutative:
            a = gen_matrix(algebra, r, s, prng)
            b = gen_matrix(algebra, s, t, prng)
            out.check("commutative-reducibility", rc_product(a, b) == cr_product(b, a), a=a, b=b)


class DualitySuite(PropertySuite):
    name = "duality"

    def trial(self, algebra, prng, index, dims, out):
        expr = gen_expr(algebra, 5, prng)
        value = evaluate(expr)
        out.check(
            "dualize-transposes",
            evaluate(dualize(expr)) == transpose(value),
            expr=render(expr),
        )
        out.check("dualize-involution", evaluate(dualize(dualize(expr))) == value, expr=render(expr))


EXPECTED_CLASSIFICATION = {
    "rational": {"commutative": True, "associative": True, "nucleus_dim": 1, "center_dim": 1},
    "complex": {"commutative": True, "associative": True, "nucleus_dim": 2, "center_dim": 2},
    "quaternion": {"commutative": False, "associative": True, "nucleus_dim": 4, "center_dim": 1},
    "matrix2": {"commutative": False, "associative": True, "nucleus_dim": 4, "center_dim": 1},
    "octonion": {"commutative": False, "associative": False, "nucleus_dim": 1, "center_dim": 1},
    "zero1": {"commutative": True, "associative": True, "nucleus_dim": 1, "center_dim": 1},
}


class StructureSuite(PropertySuite):
    name = "structure"

    def fixed(self, algebra, dims, out):
        found = classify(algebra).as_dict()
        expected = EXPECTED_CLASSIFICATION.get(algebra.name, {})
        for key, value in expected.items():
            out.check(
                "classification",
                found[key] == value,
                f"{key}: expected {value}, found {found[key]}",
                algebra=algebra.name,
            )
        out.find("classification", ", ".join(f"{k}={v}" for k, v in found.items()))
        triples = list(algebra.nonassociative_triples())
        out.check(
            "associator-flag",
            algebra.is_associative == (not triples),
            algebra=algebra.name,
        )
        if triples:
            i, j, k = triples[0]
            labels = algebra.basis_labels
            out.find("associator-witness", f"({labels[i]}, {labels[j]}, {labels[k]}) != 0")
        ext = unital_extension(algebra)
        out.check("unital-extension-unit", ext.unit is not None, algebra=algebra.name)
        if algebra.unit is not None:
            out.check("unital-extension-identity", ext is algebra, algebra=algebra.name)
            out.check(
                "left-regular-unit",
                left_regular(algebra.one) == DMatrix.identity(algebra.dim),
                algebra=algebra.name,
            )
        else:
            out.check("unital-extension-dim", ext.dim == algebra.dim + 1, algebra=algebra.name)
            out.find("unital-extension", f"{ext.name} with basis {', '.join(ext.basis_labels)}")
        out.check(
            "identity-is-homomorphism",
            check_algebra_hom(DMatrix.identity(algebra.dim), algebra, algebra),
            algebra=algebra.name,
        )

    def trial(self, algebra, prng, index, dims, out):
        a, b, c = (gen_element(algebra, prng) for _ in range(3))
        out.check("left-distributive", a * (b + c) == a * b + a * c, a=a, b=b, c=c)
        out.check("right-distributive", (a + b) * c == a * c + b * c, a=a, b=b, c=c)
        if algebra.is_associative:
            out.check("associator-vanishes", associator(a, b, c).is_zero(), a=a, b=b, c=c)
            out.check(
                "left-regular-multiplicative",
                left_regular(a) @ left_regular(b) == left_regular(a * b),
                a=a,
                b=b,
            )
        if algebra.is_commutative:
            out.check("commutator-vanishes", commutator(a, b).is_zero(), a=a, b=b)
        out.check(
            "left-regular",
            left_regular(a).apply(b.coords) == (a * b).coords,
            a=a,
            b=b,
        )
        out.check(
            "right-regular",
            right_regular(a).apply(b.coords) == (b * a).coords,
            a=a,
            b=b,
        )
        ext = unital_extension(algebra)
        ea = embed_in_extension(a, ext)
        x = gen_element(ext, prng)
        closed = all(c == 0 for c in (ea * x).coords[algebra.dim:]) and all(
            c == 0 for c in (x * ea).coords[algebra.dim:]
        )
        out.check("extension-ideal", closed, a=a, x=x)
        out.check(
            "extension-embedding",
            embed_in_extension(a * b, ext) == ea * embed_in_extension(b, ext),
            a=a,
            b=b,
        )
        p = gen_permutation(prng.randint(1, 5), prng)
        q = gen_permutation(len(p), prng)
        out.check(
            "parity-multiplicative",
            parity(p.compose(q)) == parity(p) * parity(q),
            p=list(p.image),
            q=list(q.image),
        )
        dm = gen_dmatrix(3, 3, prng)
        out.check("rank-transpose", rank(dm) == rank(dm.transpose()), a=dm)
        x = DMatrix.column_vector([gen_rational(prng) for _ in range(3)])
        solution = solve_linear(dm, dm @ x)
        out.check("solve-consistent", not isinstance(solution, NoSolution), a=dm, x=x)


def _side_witness(algebra: Algebra) -> Optional[Tuple[int, int]]:
    basis = algebra.basis()
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if x * y != y * x:
                return (i, j)
    return None


class ModuleLawsSuite(PropertySuite):
    name = "module-laws"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        witness = _side_witness(algebra)
        if witness is None:
            out.find("side-witness", f"{algebra.name} is commutative, left and right actions agree")
            return
        i, j = witness
        p, y = algebra.basis_element(i), algebra.basis_element(j)
        left = contract([p], [OrientedVector(algebra, Orientation.LEFT_COLUMN, (y,))])
        right = contract([p], [OrientedVector(algebra, Orientation.RIGHT_COLUMN, (y,))])
        if out.check("side-witness", left.comps != right.comps, p=p, v=y):
            labels = algebra.basis_labels
            out.find(
                "side-witness",
                f"coefficient {labels[i]} on vector ({labels[j]}): left gives ({left.comps[0]}), "
                f"right gives ({right.comps[0]})",
            )

    def trial(self, algebra, prng, index, dims, out):
        n = dims or 3
        one = algebra.one
        for orientation in Orientation:
            p, q = gen_element(algebra, prng), gen_element(algebra, prng)
            m, d = gen_rational(prng), gen_rational(prng)
            v = gen_vector(algebra, orientation, n, prng)
            w = gen_vector(algebra, orientation, n, prng)
            tag = orientation.value
            out.check(f"{tag}:addition-commutative", v + w == w + v, v=v, w=w)
            out.check(f"{tag}:distributive-vectors", (v + w).act(p) == v.act(p) + w.act(p), p=p, v=v, w=w)
            out.check(f"{tag}:distributive-scalars", v.act(p + q) == v.act(p) + v.act(q), p=p, q=q, v=v)
            out.check(f"{tag}:unitarity", v.act(one) == v, v=v)
            out.check(f"{tag}:rational-associative", v.scale(d).scale(m) == v.scale(m * d), m=m, d=d, v=v)
            out.check(f"{tag}:rational-commutes", v.scale(d).act(p) == v.act(p).scale(d), p=p, d=d, v=v)
            if algebra.is_associative:
                if orientation.side is Side.LEFT:
                    # p(qv) = (pq)v
                    ok = v.act(q).act(p) == v.act(p * q)
                else:
                    # (vp)q = v(pq)
                    ok = v.act(p).act(q) == v.act(p * q)
                out.check(f"{tag}:associative", ok, p=p, q=q, v=v)


def _dependent_family(algebra: Algebra, orientation: Orientation, n: int) -> List[OrientedVector]:
    """(1, 0, ...) together with (e, 0, ...) for a second basis element e (or 2)"""
    zero = algebra.zero
    second = algebra.basis_element(1) if algebra.dim > 1 else algebra.one.scale(2)
    first = (algebra.one,) + (zero,) * (n - 1)
    other = (second,) + (zero,) * (n - 1)
    return [OrientedVector(algebra, orientation, first), OrientedVector(algebra, orientation, other)]


class CoordinatesSuite(PropertySuite):
    name = "coords"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        n = dims or 2
        for orientation in Orientation:
            family = _dependent_family(algebra, orientation, n)
            target = family[0] + family[1]
            result = coordinates(target, Basis.of(family))
            tag = orientation.value
            if not out.check(f"{tag}:dependent-non-unique", isinstance(result, NonUnique), v=target):
                continue
            witness = list(result.witness)
            annihilates = contract(witness, family).is_zero()
            nonzero = any(not c.is_zero() for c in witness)
            out.check(f"{tag}:witness-annihilates", annihilates and nonzero, witness=witness)
            if orientation is Orientation.LEFT_COLUMN:
                out.find("dependent-witness", "(" + ", ".join(str(c) for c in witness) + ")")

    def trial(self, algebra, prng, index, dims, out):
        n = dims or 2 + index % 2
        orientation = prng.choice(list(Orientation))
        basis = gen_basis(algebra, orientation, n, prng)
        coeffs = tuple(gen_element(algebra, prng) for _ in range(n))
        v = expand(basis, coeffs)
        tag = orientation.value
        out.check(
            f"{tag}:round-trip",
            coordinates(v, basis) == UniqueCoordinates(coeffs),
            basis=[b for b in basis.vectors],
            coords=list(coeffs),
        )
        out.check(f"{tag}:in-span", in_span(v, basis.vectors), v=v)
        out.check(f"{tag}:independent", is_linearly_independent(basis.vectors), basis=list(basis.vectors))
        if not algebra.is_associative:
            return
        # spans are closed under linear combination
        gens = list(basis.vectors[: max(1, n - 1)])
        x = contract([gen_element(algebra, prng) for _ in gens], gens)
        y = contract([gen_element(algebra, prng) for _ in gens], gens)
        p = gen_element(algebra, prng)
        out.check(f"{tag}:submodule", in_span(x.act(p) + y, gens), x=x, y=y, p=p)


class ExtensionSuite(PropertySuite):
    name = "extension"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        n = dims or 2
        for orientation in Orientation:
            ext = extend_basis(standard_basis(algebra, orientation, n))
            out.check(f"{orientation.value}:standard-rank", ext.rank == n * algebra.dim, rank=ext.rank)
            degenerate = Basis.of(
                list(standard_basis(algebra, orientation, n).vectors[:-1])
                + [OrientedVector(algebra, orientation, (algebra.zero,) * n)]
            )
            out.check(
                f"{orientation.value}:zero-vector-flagged",
                not extend_basis(degenerate).full,
                n=n,
            )
        if algebra.name == "matrix2":
            self._quasibasis(algebra, out)

    def _quasibasis(self, algebra, out):
        e11, e12, _, e22 = algebra.basis()
        family = [
            OrientedVector(algebra, Orientation.LEFT_COLUMN, (e11,)),
            OrientedVector(algebra, Orientation.LEFT_COLUMN, (e22,)),
        ]
        out.check("quasibasis-generating", is_quasibasis(family))
        out.check("quasibasis-dependent", not is_linearly_independent(family))
        out.check(
            "quasibasis-witness",
            contract([e12, algebra.zero], family).is_zero(),
            witness=[e12, algebra.zero],
        )
        out.find("quasibasis", "((E11), (E22)) generates A^1 minimally; (E12, 0) annihilates it")

    def trial(self, algebra, prng, index, dims, out):
        n = dims or 1 + index % 3
        orientation = prng.choice(list(Orientation))
        tag = orientation.value
        basis = gen_basis(algebra, orientation, n, prng)
        ext = extend_basis(basis)
        out.check(
            f"{tag}:extension-rank",
            ext.rank == n * algebra.dim and len(ext.vectors) == n * algebra.dim,
            basis=list(basis.vectors),
            rank=ext.rank,
        )
        family = Basis(orientation, tuple(gen_vector(algebra, orientation, n, prng) for _ in range(n)))
        target = gen_vector(algebra, orientation, n, prng)
        unique = isinstance(coordinates(target, family), UniqueCoordinates)
        out.check(
            f"{tag}:rank-matches-uniqueness",
            extend_basis(family).full == unique,
            family=list(family.vectors),
            target=target,
        )
        out.check(
            f"{tag}:full-rank-generates",
            not extend_basis(family).full or is_generating_set(family.vectors),
            family=list(family.vectors),
        )


STAR_FORMS = ("rc(g,h)", "cr(g,h)", "rc(h,g)", "cr(h,g)")

COMPLEX_IN_QUATERNION = DMatrix.from_rows([[1, 0], [0, 1], [0, 0], [0, 0]])


def _star_candidates(g: ModuleHom, h: ModuleHom) -> Dict[str, GenMatrix]:
    return {
        "rc(g,h)": rc_product(g.matrix, h.matrix),
        "cr(g,h)": cr_product(g.matrix, h.matrix),
        "rc(h,g)": rc_product(h.matrix, g.matrix),
        "cr(h,g)": cr_product(h.matrix, g.matrix),
    }


class HomLawsSuite(PropertySuite):
    name = "hom-laws"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        if not algebra.is_associative:
            out.find(
                "degraded",
                f"{algebra.name} is not associative: scalar and composition laws skipped",
            )

    def trial(self, algebra, prng, index, dims, out):
        n = max(dims or 2, 2)
        for orientation in Orientation:
            tag = orientation.value
            g, h, k = (gen_hom(algebra, orientation, n, n, prng) for _ in range(3))
            u = tuple(gen_element(algebra, prng) for _ in range(n))
            v = tuple(gen_element(algebra, prng) for _ in range(n))
            a = gen_element(algebra, prng)
            added = tuple(x + y for x, y in zip(u, v))
            out.check(
                f"{tag}:additive",
                apply(g, added) == tuple(x + y for x, y in zip(apply(g, u), apply(g, v))),
                g=g,
                u=u,
                v=v,
            )
            out.check(
                f"{tag}:sum",
                apply(hom_sum(g, k), v) == tuple(x + y for x, y in zip(apply(g, v), apply(k, v))),
                g=g,
                h=k,
                v=v,
            )
            out.check(f"{tag}:sum-inverse", hom_sum(hom_sum(g, k), hom_neg(g)).matrix == k.matrix, g=g, h=k)
            out.check(f"{tag}:identity", apply(identity_hom(algebra, orientation, n), v) == v, v=v)
            if not algebra.is_associative:
                continue
            if orientation.side is Side.LEFT:
                scaled = tuple(a * x for x in v)
                ok = apply(g, scaled) == tuple(a * y for y in apply(g, v))
            else:
                scaled = tuple(x * a for x in v)
                ok = apply(g, scaled) == tuple(y * a for y in apply(g, v))
            out.check(f"{tag}:scalar-linear", ok, g=g, a=a, v=v)
            composite = hom_compose(h, g)
            out.check(
                f"{tag}:compose",
                apply(composite, v) == apply(h, apply(g, v)),
                g=g,
                h=h,
                v=v,
            )
            out.check(
                f"{tag}:compose-identity",
                hom_compose(g, identity_hom(algebra, orientation, n)).matrix == g.matrix,
                g=g,
            )
            matches = [name for name, m in _star_candidates(g, h).items() if m == composite.matrix]
            out.observations[tag] = matches
            if algebra.name == "quaternion":
                self._cross_algebra(algebra, orientation, n, prng, out)

    def _cross_algebra(self, algebra, orientation, n, prng, out):
        source = load_builtin("complex")
        f = gen_matrix(algebra, n, n, prng)
        h = ModuleHom(orientation, f, COMPLEX_IN_QUATERNION, source)
        a = gen_element(source, prng)
        v = tuple(gen_element(source, prng) for _ in range(n))
        image = h.carry(a)
        if orientation.side is Side.LEFT:
            ok = apply(h, tuple(a * x for x in v)) == tuple(image * y for y in apply(h, v))
        else:
            ok = apply(h, tuple(x * a for x in v)) == tuple(y * image for y in apply(h, v))
        out.check(f"{orientation.value}:cross-algebra-linear", ok, f=f, a=a, v=v)

    def summarize(self, algebra, trials, out):
        if not algebra.is_associative:
            return
        for orientation in Orientation:
            tag = orientation.value
            seen = [t.observations[tag] for t in trials if tag in t.observations]
            if not seen:
                continue
            common = [name for name in STAR_FORMS if all(name in s for s in seen)]
            if not out.check(f"{tag}:star-consistent", bool(common), forms=seen[:3]):
                continue
            if not algebra.is_commutative:
                out.check(f"{tag}:star-unique", len(common) == 1, forms=common)
            out.find(f"star-form {tag}", " = ".join(common))


class TensorLawsSuite(PropertySuite):
    name = "tensor-laws"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        if not algebra.is_associative:
            t = identity_tensor(algebra)
            try:
                tensor_apply(t, algebra.one)
                out.check("nonassociative-rejected", False, algebra=algebra.name)
            except NonAssociativeAlgebraError as e:
                out.find("nonassociative-rejected", str(e))
            return
        out.check(
            "identity-map",
            tensor_to_map(identity_tensor(algebra)) == DMatrix.identity(algebra.dim),
        )
        if algebra.dim > 1:
            e = algebra.basis_element(1)
            one = algebra.one
            out.check("left-factor-map", tensor_to_map(Tensor.simple(e, one)) == left_regular(e), e=e)
            out.check("right-factor-map", tensor_to_map(Tensor.simple(one, e)) == right_regular(e), e=e)
        if algebra.name == "quaternion":
            _, i, j, k = algebra.basis()
            value = tensor_apply(Tensor.simple(i, j), k)
            out.check("i-tensor-j-on-k", value == algebra.one, value=value)

    def trial(self, algebra, prng, index, dims, out):
        if not algebra.is_associative:
            return
        s, t = gen_tensor(algebra, prng), gen_tensor(algebra, prng)
        c, d = gen_element(algebra, prng), gen_element(algebra, prng)
        out.check(
            "compose-representation",
            tensor_to_map(tensor_compose(s, t)) == tensor_to_map(s) @ tensor_to_map(t),
            s=str(s),
            t=str(t),
        )
        out.check(
            "apply-matches-map",
            tensor_to_map(s).apply(c.coords) == tensor_apply(s, c).coords,
            s=str(s),
            c=c,
        )
        out.check(
            "bilinear-tensor",
            tensor_apply(s + t, c) == tensor_apply(s, c) + tensor_apply(t, c),
            s=str(s),
            t=str(t),
            c=c,
        )
        out.check(
            "bilinear-argument",
            tensor_apply(s, c + d) == tensor_apply(s, c) + tensor_apply(s, d),
            s=str(s),
            c=c,
            d=d,
        )
        out.check(
            "compose-identity",
            tensor_to_map(tensor_compose(identity_tensor(algebra), s)) == tensor_to_map(s),
            s=str(s),
        )


GOLDEN_VARIABLES = ("x", "y", "z")

GOLDEN_PARTIALS = {
    "x^2*y^3 + x*z^2*x": {
        "x": ["1·(1 ⊗ x*y^3)", "1·(x ⊗ y^3)", "1·(1 ⊗ z^2*x)", "1·(x*z^2 ⊗ 1)"],
        "y": ["1·(x^2 ⊗ y^2)", "1·(x^2*y ⊗ y)", "1·(x^2*y^2 ⊗ 1)"],
        "z": ["1·(x ⊗ z*x)", "1·(x*z ⊗ x)"],
    },
    "x*z*y*x + x^2*y*x*y": {
        "x": ["1·(1 ⊗ z*y*x)", "1·(x*z*y ⊗ 1)", "1·(1 ⊗ x*y*x*y)", "1·(x ⊗ y*x*y)", "1·(x^2*y ⊗ y)"],
        "y": ["1·(x*z ⊗ x)", "1·(x^2 ⊗ x*y)", "1·(x^2*y*x ⊗ 1)"],
        "z": ["1·(x ⊗ y*x)"],
    },
}


class DiffSuite(PropertySuite):
    name = "diff"
    needs_unit = True

    def fixed(self, algebra, dims, out):
        for source, partials in GOLDEN_PARTIALS.items():
            p = parse_ncpoly(source, GOLDEN_VARIABLES)
            for var, expected in partials.items():
                found = differentiate(p, var).term_strings()
                out.check(
                    f"golden-d{var}",
                    found == expected,
                    f"found {found}",
                    expr=source,
                )
        if not algebra.is_associative:
            x = parse_ncpoly("x", ("x",))
            try:
                jacobian_apply([x], None, [algebra.one], [algebra.one])
                out.check("nonassociative-rejected", False, algebra=algebra.name)
            except NonAssociativeAlgebraError as e:
                out.find("nonassociative-rejected", str(e))

    def trial(self, algebra, prng, index, dims, out):
        if not algebra.is_associative:
            return
        maps = [gen_ncpoly(GOLDEN_VARIABLES, prng) for _ in range(2)]
        point = [gen_element(algebra, prng) for _ in GOLDEN_VARIABLES]
        displacement = [gen_element(algebra, prng) for _ in GOLDEN_VARIABLES]
        out.check(
            "first-order-exact",
            jacobian_apply(maps, GOLDEN_VARIABLES, point, displacement)
            == first_order(maps, GOLDEN_VARIABLES, point, displacement),
            maps=[str(m) for m in maps],
            point=point,
            displacement=displacement,
        )
        p, q = maps
        one = algebra.one
        [dpq] = first_order([p * q], GOLDEN_VARIABLES, point, displacement)
        [dp] = first_order([p], GOLDEN_VARIABLES, point, displacement)
        [dq] = first_order([q], GOLDEN_VARIABLES, point, displacement)
        out.check(
            "leibniz",
            dpq == dp * q.evaluate(point, one) + p.evaluate(point, one) * dq,
            p=str(p),
            q=str(q),
            point=point,
        )


class ShiftsSuite(PropertySuite):
    name = "shifts"

    def fixed(self, algebra, dims, out):
        basis = algebra.basis()
        labels = algebra.basis_labels
        witness = None
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                if left_regular(a) @ right_regular(b) != right_regular(b) @ left_regular(a):
                    witness = (i, j)
                    break
            if witness:
                break
        if algebra.is_associative:
            out.check(
                "basis-shifts-commute",
                witness is None,
                pair=None if witness is None else [labels[witness[0]], labels[witness[1]]],
            )
        elif out.check("nonassociative-witness", witness is not None, algebra=algebra.name):
            i, j = witness
            out.find("shift-witness", f"L({labels[i]}) and R({labels[j]}) do not commute")

    def trial(self, algebra, prng, index, dims, out):
        a, b = gen_element(algebra, prng), gen_element(algebra, prng)
        out.check("left-shift-additive", left_regular(a + b) == left_regular(a) + left_regular(b), a=a, b=b)
        out.check("right-shift-additive", right_regular(a + b) == right_regular(a) + right_regular(b), a=a, b=b)
        if algebra.is_associative:
            out.check(
                "shifts-commute",
                left_regular(a) @ right_regular(b) == right_regular(b) @ left_regular(a),
                a=a,
                b=b,
            )


SUITES: Dict[str, PropertySuite] = {
    suite.name: suite
    for suite in (
        BiringSuite(),
        ReducibilitySuite(),
        DualitySuite(),
        StructureSuite(),
        ModuleLawsSuite(),
        CoordinatesSuite(),
        ExtensionSuite(),
        HomLawsSuite(),
        TensorLawsSuite(),
        ShiftsSuite(),
        DiffSuite(),
    )
}

SUITE_NAMES = tuple(SUITES)


def _resolve_algebra(algebra: Union[str, Algebra]) -> Algebra:
    return load_builtin(algebra) if isinstance(algebra, str) else algebra


def _run_trial(suite: PropertySuite, algebra: Algebra, seed: int, index: int, dims: Optional[int]) -> Outcome:
    out = Outcome()
    prng = SplitMix64(split(seed, index))
    try:
        suite.trial(algebra, prng, index, dims, out)
    except Exception as e:
        logger.error(f"Trial {index} of {suite.name} on {algebra.name} raised: {e}")
        out.check("no-exception", False, f"{type(e).__name__}: {e}", trial=index)
    for failure in out.failures:
        failure.inputs.setdefault("trial", index)
    return out


def run_suite(
    name: str,
    algebra: Union[str, Algebra],
    trials: int,
    seed: int,
    dims: Optional[int] = None,
) -> SuiteReport:
    """Run one suite and assemble its report"""
    if name not in SUITES:
        raise UnknownNameError(f"Unknown suite {name!r}; suites are {', '.join(SUITE_NAMES)}")
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    if not 0 <= seed <= MASK64:
        raise InvalidArgumentError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if dims is not None and dims < 1:
        raise InvalidArgumentError(f"dim must be >= 1, got {dims}")

    suite = SUITES[name]
    requested = _resolve_algebra(algebra)
    start_time = time.time()
    logger.info(f"Running suite {name} on {requested.name}: {trials} trials, seed {seed}")
    try:
        working = requested
        summary = Outcome()
        if suite.needs_unit and requested.unit is None:
            working = unital_extension(requested)
            summary.find("unital-extension", f"{requested.name} has no unit; laws checked in {working.name}")

        suite.fixed(working, dims, summary)

        if settings.workers > 1:
            with ThreadPoolExecutor(max_workers=settings.workers) as executor:
                outcomes = list(
                    executor.map(lambda i: _run_trial(suite, working, seed, i, dims), range(trials))
                )
        else:
            outcomes = [_run_trial(suite, working, seed, i, dims) for i in range(trials)]

        suite.summarize(working, outcomes, summary)

        failures = list(summary.failures)
        findings = list(summary.findings)
        for outcome in outcomes:
            failures.extend(outcome.failures)
            findings.extend(outcome.findings)

        report = SuiteReport(
            suite=name,
            algebra=requested.name,
            trials=trials,
            seed=seed,
            passed=not failures,
            failures=failures,
            findings=findings,
        )
        elapsed_ms = int((time.time() - start_time) * 1000)
        logger.info(
            f"Suite {name} on {requested.name} {'passed' if report.passed else 'failed'} "
            f"with {len(failures)} failures in {elapsed_ms}ms"
        )
        return report
    except Exception as e:
        logger.error(f"Error running suite {name} on {requested.name}: {e}")
        raise


def run_all(
    algebra: Union[str, Algebra],
    trials: int,
    seed: int,
    dims: Optional[int] = None,
) -> VerificationSummary:
    """Every suite in registration order"""
    requested = _resolve_algebra(algebra)
    reports = [run_suite(name, requested, trials, seed, dims) for name in SUITE_NAMES]
    return VerificationSummary(
        algebra=requested.name,
        trials=trials,
        seed=seed,
        passed=all(r.passed for r in reports),
        reports=reports,
    )
