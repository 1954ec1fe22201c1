"""
Exception hierarchy for the ncmod kernel
"""

from typing import Optional


class NcmodError(Exception):
    """Base class for every error raised by ncmod"""


class DimensionMismatchError(NcmodError, ValueError):
    """Shapes or lengths of operands do not fit together"""


class AlgebraMismatchError(NcmodError, ValueError):
    """Operands live in different algebras"""


class OrientationMismatchError(NcmodError, ValueError):
    """Vectors, bases or homomorphisms carry different orientations"""


class NonAssociativeAlgebraError(NcmodError):
    """Operation needs an associative algebra"""


class UnknownNameError(NcmodError, KeyError):
    """Unknown algebra, suite or variable name"""

    def __str__(self):
        # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class InvalidAlgebraError(NcmodError, ValueError):
    """Structure constants are inconsistent (false unit, duplicates, bad shape)"""


class InvalidBasisError(NcmodError, ValueError):
    """Vectors do not form a basis of the module"""


class NcPolySyntaxError(NcmodError, ValueError):
    """Polynomial source text does not match the grammar"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class MalformedInputError(NcmodError):
    """Input file could not be decoded or validated"""


class InvalidArgumentError(NcmodError, ValueError):
    """Parameter outside its allowed range (trial count, seed, dimension)"""
