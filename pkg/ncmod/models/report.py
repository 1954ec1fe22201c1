"""
Verification report models
"""

from typing import Any, Dict, List

from pydantic import BaseModel, Field, model_validator


class SuiteFailure(BaseModel):
    """A law that did not hold on one set of inputs"""

    law: str = Field(..., description="Name of the violated law")
    inputs: Dict[str, Any] = Field(
        default_factory=dict, description="Serialized inputs of the failing check"
    )
    detail: str = Field(default="", description="What was expected and what was found")


class SuiteFinding(BaseModel):
    """A recorded witness or identification produced while checking"""

    name: str = Field(..., description="Finding identifier")
    detail: str = Field(..., description="Human-readable content of the finding")


class SuiteReport(BaseModel):
    """Outcome of one property suite on one algebra"""

    suite: str = Field(..., description="Suite name")
    algebra: str = Field(..., description="Algebra the suite ran against")
    trials: int = Field(..., ge=1, description="Number of seeded trials")
    seed: int = Field(..., ge=0, lt=2**64, description="64-bit master seed")
    passed: bool = Field(..., description="True exactly when there are no failures")
    failures: List[SuiteFailure] = Field(default_factory=list, description="Violated laws")
    findings: List[SuiteFinding] = Field(
        default_factory=list, description="Witnesses and identifications"
    )

    @model_validator(mode="after")
    def check_passed(self):
        if self.passed != (not self.failures):
            raise ValueError("passed must be true exactly when failures is empty")
        return self

    def get_failures_by_law(self, law: str) -> List[SuiteFailure]:
        return [f for f in self.failures if f.law == law]

    def finding(self, name: str) -> str:
        for f in self.findings:
            if f.name == name:
                return f.detail
        raise KeyError(name)


class VerificationSummary(BaseModel):
    """Reports of every suite run by `verify --suite all`"""

    algebra: str = Field(..., description="Algebra the suites ran against")
    trials: int = Field(..., ge=1, description="Trials per suite")
    seed: int = Field(..., ge=0, lt=2**64, description="64-bit master seed")
    passed: bool = Field(..., description="True when every suite passed")
    reports: List[SuiteReport] = Field(default_factory=list, description="Per-suite reports")

    @model_validator(mode="after")
    def check_passed(self):
        if self.passed != all(r.passed for r in self.reports):
            raise ValueError("passed must agree with the suite reports")
        return self
