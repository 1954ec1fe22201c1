"""
Shared fixtures and hypothesis profiles
"""

import os

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from ncmod.core.algebra import load_builtin

hypothesis_settings.register_profile(
    "ci",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
hypothesis_settings.register_profile(
    "fast", max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much]
)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture
def quaternion():
    return load_builtin("quaternion")


@pytest.fixture
def complex_alg():
    return load_builtin("complex")


@pytest.fixture
def rational_alg():
    return load_builtin("rational")


@pytest.fixture
def matrix2():
    return load_builtin("matrix2")


@pytest.fixture
def octonion():
    return load_builtin("octonion")


@pytest.fixture
def zero1():
    return load_builtin("zero1")
