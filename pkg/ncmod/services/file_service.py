"""
File service for loading and saving ncmod JSON documents
"""

import logging
from pathlib import Path
from typing import Dict, List, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from ncmod.core.algebra import BUILTIN_NAMES, Algebra, AlgElem, load_builtin
from ncmod.core.amodule import Basis, OrientedVector
from ncmod.core.biring import RATIONALS, GenMatrix
from ncmod.core.exact import DMatrix, format_rational, parse_rational
from ncmod.core.exceptions import MalformedInputError, NcmodError
from ncmod.core.hom import ModuleHom
from ncmod.models.files import (
    AlgebraFile,
    ConstantEntry,
    HomFile,
    MatrixFile,
    VectorFile,
)

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)
PathLike = Union[str, Path]


class FileService:
    """Converts between JSON files and kernel objects"""

    def __init__(self):
        self._algebras: Dict[str, Algebra] = {}

    def _read(self, path: PathLike, model: Type[M]) -> M:
        try:
            text = Path(path).read_text(encoding="utf-8")
            document = model.model_validate_json(text)
            logger.info(f"Loaded {model.__name__} from {path}")
            return document
        except ValidationError as e:
            logger.error(f"Invalid {model.__name__} in {path}: {e}")
            raise MalformedInputError(
                f"{path}: {e.error_count()} validation error(s): {e.errors()[0]['msg']}"
            ) from e
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f"Error reading {path}: {e}")
            raise MalformedInputError(f"Cannot read {path}: {e}") from e

    def save(self, document: BaseModel, path: PathLike):
        """Write a model as indented JSON"""
        try:
            Path(path).write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
            logger.info(f"Saved {type(document).__name__} to {path}")
        except OSError as e:
            logger.error(f"Error writing {path}: {e}")
            raise

    # Algebras

    def resolve_algebra(self, name_or_path: str) -> Algebra:
        """Built-in name, a name loaded earlier, or a structure-constants file"""
        if name_or_path in BUILTIN_NAMES:
            return load_builtin(name_or_path)
        if name_or_path in self._algebras:
            return self._algebras[name_or_path]
        if Path(name_or_path).suffix == ".json" or Path(name_or_path).exists():
            return self.load_algebra(name_or_path)
        return load_builtin(name_or_path)

    def load_algebra(self, path: PathLike) -> Algebra:
        document = self._read(path, AlgebraFile)
        try:
            algebra = Algebra.from_entries(
                name=document.name,
                labels=document.basis,
                entries=[(e.i, e.j, e.k, parse_rational(e.c)) for e in document.constants],
                unit_index=document.unit,
            )
        except NcmodError as e:
            raise MalformedInputError(f"{path}: {e}") from e
        self._algebras[algebra.name] = algebra
        self._algebras[str(path)] = algebra
        return algebra

    @staticmethod
    def algebra_to_file(algebra: Algebra) -> AlgebraFile:
        return AlgebraFile(
            name=algebra.name,
            dim=algebra.dim,
            basis=list(algebra.basis_labels),
            unit=algebra.unit_index,
            constants=[
                ConstantEntry(i=i, j=j, k=k, c=format_rational(c))
                for i, j, k, c in algebra.entries()
            ],
        )

    # Matrices

    def load_matrix(self, path: PathLike) -> GenMatrix:
        document = self._read(path, MatrixFile)
        try:
            if document.algebra is None:
                rows = [[parse_rational(x) for x in row] for row in document.entries]
                return GenMatrix.from_rows(rows, RATIONALS, cols=document.cols)
            algebra = self.resolve_algebra(document.algebra)
            rows = [[algebra.parse_element(x) for x in row] for row in document.entries]
            return GenMatrix.from_rows(rows, algebra, cols=document.cols)
        except (NcmodError, ValueError) as e:
            raise MalformedInputError(f"{path}: {e}") from e

    @staticmethod
    def matrix_to_file(matrix: GenMatrix) -> MatrixFile:
        algebra = matrix.carrier if isinstance(matrix.carrier, Algebra) else None
        return MatrixFile(
            rows=matrix.rows,
            cols=matrix.cols,
            algebra=algebra.name if algebra else None,
            entries=[[_entry_string(x) for x in row] for row in matrix.entries],
        )

    # Vectors and bases

    def load_vectors(self, path: PathLike) -> List[OrientedVector]:
        document = self._read(path, VectorFile)
        try:
            algebra = self.resolve_algebra(document.algebra)
            return [
                OrientedVector(
                    algebra,
                    document.orientation,
                    tuple(algebra.parse_element(x) for x in vector),
                )
                for vector in document.vectors
            ]
        except (NcmodError, ValueError) as e:
            raise MalformedInputError(f"{path}: {e}") from e

    def load_basis(self, path: PathLike) -> Basis:
        vectors = self.load_vectors(path)
        return Basis.of(vectors)

    @staticmethod
    def vectors_to_file(vectors: List[OrientedVector]) -> VectorFile:
        first = vectors[0]
        return VectorFile(
            algebra=first.algebra.name,
            orientation=first.orientation,
            vectors=[v.to_strings() for v in vectors],
        )

    # Homomorphisms

    def load_hom(self, path: PathLike) -> ModuleHom:
        document = self._read(path, HomFile)
        try:
            algebra = self.resolve_algebra(document.algebra)
            rows = [[algebra.parse_element(x) for x in row] for row in document.matrix]
            matrix = GenMatrix.from_rows(rows, algebra)
            alg_hom = None
            source = None
            if document.alg_hom is not None:
                alg_hom = DMatrix.from_rows(
                    [[parse_rational(x) for x in row] for row in document.alg_hom]
                )
                source = self.resolve_algebra(document.source_algebra)
            elif document.source_algebra is not None:
                source = self.resolve_algebra(document.source_algebra)
            return ModuleHom(document.orientation, matrix, alg_hom, source)
        except (NcmodError, ValueError) as e:
            raise MalformedInputError(f"{path}: {e}") from e

    @staticmethod
    def hom_to_file(h: ModuleHom) -> HomFile:
        return HomFile(
            algebra=h.algebra.name,
            orientation=h.orientation,
            matrix=[[x.to_coord_string() for x in row] for row in h.matrix.entries],
            alg_hom=h.alg_hom.to_strings() if h.alg_hom is not None else None,
            source_algebra=h.source_algebra.name if h.source_algebra is not None else None,
        )


def _entry_string(x) -> str:
    if isinstance(x, AlgElem):
        return x.to_coord_string()
    return format_rational(x)
