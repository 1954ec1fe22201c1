"""
Data models for the ncmod toolkit
"""

from .files import AlgebraFile, ConstantEntry, HomFile, MatrixFile, VectorFile
from .report import SuiteFailure, SuiteFinding, SuiteReport, VerificationSummary

__all__ = [
    "AlgebraFile",
    "ConstantEntry",
    "HomFile",
    "MatrixFile",
    "VectorFile",
    "SuiteFailure",
    "SuiteFinding",
    "SuiteReport",
    "VerificationSummary",
]
