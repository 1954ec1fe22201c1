"""
Input and output file formats
"""

from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ncmod.core.amodule import Orientation
from ncmod.core.exact import is_canonical_rational


def _check_rational(text: str) -> str:
    if not is_canonical_rational(text):
        raise ValueError(f"{text!r} is not a canonical rational (\"p\" or \"p/q\", q > 0, reduced)")
    return text


def _check_element(text: str) -> str:
    """Coordinate string "c0,c1,..." of canonical rationals"""
    for part in text.split(","):
        _check_rational(part)
    return text


def _check_rectangular(rows: List[List[str]], name: str) -> int:
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise ValueError(f"{name} rows have different lengths {sorted(widths)}")
    return widths.pop() if widths else 0


class ConstantEntry(BaseModel):
    """One nonzero structural constant C[i][j][k]"""

    i: int = Field(..., ge=0, description="Index of the left factor")
    j: int = Field(..., ge=0, description="Index of the right factor")
    k: int = Field(..., ge=0, description="Index of the product coordinate")
    c: str = Field(..., description="Value as a canonical rational string")

    @field_validator("c")
    @classmethod
    def validate_c(cls, v):
        return _check_rational(v)


class AlgebraFile(BaseModel):
    """Structure-constants file"""

    name: str = Field(..., min_length=1, description="Algebra name")
    dim: int = Field(..., ge=1, description="Dimension over the rationals")
    basis: List[str] = Field(..., description="Basis labels")
    unit: Optional[int] = Field(None, description="Index of the unit basis vector")
    constants: List[ConstantEntry] = Field(
        default_factory=list, description="Nonzero constants; omitted triples are zero"
    )

    @field_validator("basis")
    @classmethod
    def validate_basis(cls, v, info):
        dim = info.data.get("dim")
        if dim is not None and len(v) != dim:
            raise ValueError(f"{len(v)} basis labels for dimension {dim}")
        if len(set(v)) != len(v):
            raise ValueError("Basis labels must be distinct")
        return v

    @model_validator(mode="after")
    def validate_indices(self):
        seen = set()
        for entry in self.constants:
            triple = (entry.i, entry.j, entry.k)
            if max(triple) >= self.dim:
                raise ValueError(f"Constant index {triple} outside dimension {self.dim}")
            if triple in seen:
                raise ValueError(f"Duplicate constant {triple}")
            seen.add(triple)
        if self.unit is not None and not 0 <= self.unit < self.dim:
            raise ValueError(f"Unit index {self.unit} outside dimension {self.dim}")
        return self


class MatrixFile(BaseModel):
    """Matrix of algebra elements (coordinate strings) or of rationals"""

    rows: int = Field(..., ge=0, description="Number of rows")
    cols: int = Field(..., ge=0, description="Number of columns")
    algebra: Optional[str] = Field(None, description="Algebra of the entries; null for rationals")
    entries: List[List[str]] = Field(..., description="Entries row by row")

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, v):
        for row in v:
            for x in row:
                _check_element(x)
        return v

    @model_validator(mode="after")
    def validate_shape(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"{len(self.entries)} rows given, header says {self.rows}")
        width = _check_rectangular(self.entries, "Matrix")
        if self.rows and width != self.cols:
            raise ValueError(f"{width} columns given, header says {self.cols}")
        if self.algebra is None:
            for row in self.entries:
                for x in row:
                    if "," in x:
                        raise ValueError(f"Rational matrix holds a coordinate string {x!r}")
        return self


class VectorFile(BaseModel):
    """Vectors (a single vector or a basis) of one oriented module"""

    algebra: str = Field(..., description="Algebra name")
    orientation: Orientation = Field(..., description="Module orientation")
    vectors: List[List[str]] = Field(..., min_length=1, description="Vectors as lists of elements")

    @field_validator("vectors")
    @classmethod
    def validate_vectors(cls, v):
        for vector in v:
            if not vector:
                raise ValueError("Vectors need at least one component")
            for x in vector:
                _check_element(x)
        _check_rectangular(v, "Vector")
        return v


class HomFile(BaseModel):
    """Homomorphism matrix, optionally across an algebra homomorphism"""

    algebra: str = Field(..., description="Algebra of the matrix entries")
    orientation: Orientation = Field(..., description="Module orientation")
    matrix: List[List[str]] = Field(..., min_length=1, description="Matrix rows of elements")
    alg_hom: Optional[List[List[str]]] = Field(
        None, description="Rational matrix of the algebra homomorphism"
    )
    source_algebra: Optional[str] = Field(None, description="Algebra of the source coordinates")

    @field_validator("matrix")
    @classmethod
    def validate_matrix(cls, v):
        if _check_rectangular(v, "Matrix") == 0:
            raise ValueError("Matrix rows must not be empty")
        for row in v:
            for x in row:
                _check_element(x)
        return v

    @field_validator("alg_hom")
    @classmethod
    def validate_alg_hom(cls, v):
        if v is not None:
            _check_rectangular(v, "alg_hom")
            for row in v:
                for x in row:
                    _check_rational(x)
        return v

    @model_validator(mode="after")
    def validate_source(self):
        if self.alg_hom is not None and self.source_algebra is None:
            raise ValueError("alg_hom needs source_algebra")
        return self
