"""
Noncommutative polynomials over the rationals and their parser

A polynomial is a finite sum of rational multiples of words in the
variables; x*y and y*x are different words. Terms are stored expanded
(x^3 becomes x·x·x) in canonical order: shorter words first, then
lexicographic by variable index. The order in which words first appeared
is kept alongside for output that follows the source text.

Grammar:
    expr   := term (('+' | '-') term)*
    term   := [coef '*'?] factor ('*'? factor)*
    factor := var ('^' nat)? | '(' expr ')' ('^' nat)?
    coef   := int | int '/' posint
    var    := [A-Za-z][A-Za-z0-9_]*

A leading sign on the first term and a bare coefficient term are also
accepted.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from ncmod.core.exact import RationalLike, format_rational, to_rational
from ncmod.core.exceptions import DimensionMismatchError, NcPolySyntaxError, UnknownNameError

Word = Tuple[int, ...]


def _canonical_key(item: Tuple[Word, Fraction]):
    word = item[0]
    return (len(word), word)


@dataclass(frozen=True)
class NCPoly:
    variables: Tuple[str, ...]
    terms: Tuple[Tuple[Word, Fraction], ...]
    # words in the order they first appeared while the polynomial was built
    order: Tuple[Word, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def from_mapping(cls, variables: Sequence[str], mapping: Mapping[Word, RationalLike]) -> "NCPoly":
        items = [(tuple(w), to_rational(c)) for w, c in mapping.items()]
        n = len(variables)
        for w, _ in items:
            if any(not 0 <= x < n for x in w):
                raise DimensionMismatchError(f"Word {w} uses a letter outside {tuple(variables)}")
        items = [(w, c) for w, c in items if c != 0]
        return cls(
            tuple(variables),
            tuple(sorted(items, key=_canonical_key)),
            tuple(w for w, _ in items),
        )

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "NCPoly":
        return cls(tuple(variables), ())

    @classmethod
    def constant(cls, variables: Sequence[str], c: RationalLike) -> "NCPoly":
        return cls.from_mapping(variables, {(): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "NCPoly":
        if name not in variables:
            raise UnknownNameError(f"Unknown variable {name!r}")
        return cls.from_mapping(variables, {(list(variables).index(name),): 1})

    def source_terms(self) -> List[Tuple[Word, Fraction]]:
        """Terms in first-appearance order; canonical order breaks ties"""
        rank = {w: i for i, w in enumerate(self.order)}
        return sorted(self.terms, key=lambda t: (rank.get(t[0], len(rank)), _canonical_key(t)))

    def as_dict(self) -> Dict[Word, Fraction]:
        return dict(self.source_terms())

    def _check(self, other: "NCPoly"):
        if self.variables != other.variables:
            raise DimensionMismatchError(
                f"Polynomials over {self.variables} and {other.variables}"
            )

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        acc = self.as_dict()
        for w, c in other.source_terms():
            acc[w] = acc.get(w, Fraction(0)) + c
        return NCPoly.from_mapping(self.variables, acc)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.variables, tuple((w, -c) for w, c in self.terms), self.order)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, d: RationalLike) -> "NCPoly":
        d = to_rational(d)
        return NCPoly.from_mapping(self.variables, {w: d * c for w, c in self.source_terms()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        self._check(other)
        acc: Dict[Word, Fraction] = {}
        for w1, c1 in self.source_terms():
            for w2, c2 in other.source_terms():
                w = w1 + w2
                acc[w] = acc.get(w, Fraction(0)) + c1 * c2
        return NCPoly.from_mapping(self.variables, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "NCPoly":
        if exponent < 0:
            raise ValueError("Negative exponent")
        result = NCPoly.constant(self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w, _ in self.terms), default=0)

    def word_str(self, word: Word) -> str:
        return format_word(self.variables, word)

    def evaluate(self, point: Sequence[Any], one: Any) -> Any:
        """Σ c·w(point) in any carrier whose values have `scale`, + and *"""
        if len(point) != len(self.variables):
            raise DimensionMismatchError(
                f"Point has {len(point)} entries for variables {self.variables}"
            )
        total = one.scale(0)
        for word, c in self.terms:
            total = total + evaluate_word(word, point, one).scale(c)
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, c in self.terms:
            body = self.word_str(word)
            if not word:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{format_rational(c)}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def format_word(variables: Sequence[str], word: Word) -> str:
    """Runs of one letter collapse to x^n; factors joined by '*'; empty word is "1" """
    if not word:
        return "1"
    pieces = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = variables[word[i]]
        pieces.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(pieces)


def evaluate_word(word: Word, point: Sequence[Any], one: Any) -> Any:
    value = one
    for letter in word:
        value = value * point[letter]
    return value


# Parser

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(src: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        match = _TOKEN.match(src, pos)
        if not match:
            start = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
            raise NcPolySyntaxError(f"Unexpected character {src[start]!r}", start)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, variables: Sequence[str]):
        self.tokens = _tokenize(src)
        self.index = 0
        self.variables = tuple(variables)

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _is_op(self, text: str) -> bool:
        return self.current.kind == "op" and self.current.text == text

    def _advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def _expect_op(self, text: str):
        if not self._is_op(text):
            raise NcPolySyntaxError(
                f"Expected {text!r}, found {self.current.text or 'end of input'!r}",
                self.current.position,
            )
        self._advance()

    def _starts_factor(self) -> bool:
        return self.current.kind == "name" or self._is_op("(")

    def parse(self) -> NCPoly:
        result = self.expr()
        if self.current.kind != "end":
            raise NcPolySyntaxError(
                f"Unexpected {self.current.text!r}", self.current.position
            )
        return result

    def expr(self) -> NCPoly:
        negate = False
        if self._is_op("+") or self._is_op("-"):
            negate = self._advance().text == "-"
        result = self.term()
        if negate:
            result = -result
        while self._is_op("+") or self._is_op("-"):
            op = self._advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> NCPoly:
        coef = Fraction(1)
        if self.current.kind == "num":
            coef = self.coef()
            if self._is_op("*"):
                self._advance()
            elif not self._starts_factor():
                return NCPoly.constant(self.variables, coef)
        product = self.factor()
        while True:
            if self._is_op("*"):
                self._advance()
                product = product * self.factor()
            elif self._starts_factor():
                product = product * self.factor()
            else:
                break
        return product.scale(coef)

    def coef(self) -> Fraction:
        numerator = int(self._advance().text)
        if self._is_op("/"):
            self._advance()
            if self.current.kind != "num":
                raise NcPolySyntaxError("Expected a denominator", self.current.position)
            token = self._advance()
            denominator = int(token.text)
            if denominator == 0:
                raise NcPolySyntaxError("Zero denominator", token.position)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def factor(self) -> NCPoly:
        token = self.current
        if token.kind == "name":
            self._advance()
            if token.text not in self.variables:
                raise UnknownNameError(
                    f"Unknown variable {token.text!r} at position {token.position}"
                )
            base = NCPoly.variable(self.variables, token.text)
        elif self._is_op("("):
            self._advance()
            base = self.expr()
            self._expect_op(")")
        else:
            raise NcPolySyntaxError(
                f"Expected a variable or '(', found {token.text or 'end of input'!r}",
                token.position,
            )
        if self._is_op("^"):
            self._advance()
            if self._is_op("-"):
                raise NcPolySyntaxError("Negative exponent", self.current.position)
            if self.current.kind != "num":
                raise NcPolySyntaxError("Expected an exponent", self.current.position)
            base = base ** int(self._advance().text)
        return base


def parse_ncpoly(src: str, variables: Sequence[str]) -> NCPoly:
    """Parse src into an expanded polynomial over the ordered variables"""
    if len(set(variables)) != len(variables):
        raise NcPolySyntaxError(f"Repeated variable in {list(variables)}")
    return _Parser(src, variables).parse()


def parse_map(src: str, variables: Sequence[str]) -> List[Tuple[str, NCPoly]]:
    """Parse semicolon-separated "name = expr" bindings"""
    bindings = []
    offset = 0
    for chunk in src.split(";"):
        if chunk.strip():
            name, sep, body = chunk.partition("=")
            if not sep or not name.strip():
                raise NcPolySyntaxError("Expected 'name = expr'", offset)
            try:
                poly = parse_ncpoly(body, variables)
            except NcPolySyntaxError as e:
                position = None if e.position is None else offset + len(name) + 1 + e.position
                raise NcPolySyntaxError(str(e).split(" at position")[0], position) from None
            bindings.append((name.strip(), poly))
        offset += len(chunk) + 1
    if not bindings:
        raise NcPolySyntaxError("Empty map", 0)
    return bindings


def parse_variables(text: Iterable[str]) -> Tuple[str, ...]:
    if isinstance(text, str):
        names = [v.strip() for v in text.split(",") if v.strip()]
    else:
        names = list(text)
    for name in names:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise NcPolySyntaxError(f"Invalid variable name {name!r}")
    if not names:
        raise NcPolySyntaxError("No variables given")
    return tuple(names)
