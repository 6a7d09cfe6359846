# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import pytest
from hypothesis import settings

from splitline.oracle import ExactField

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile("dev")

ORACLE_MODULES = ("oracle", "verify")


@pytest.fixture
def prime_field():
    return ExactField()


@pytest.fixture
def small_prime_field():
    return ExactField(10007)


@pytest.fixture
def rationals():
    return ExactField.rationals()


@pytest.fixture(params=[0, 1, 7, 42])
def seed(request):
    return request.param


def pytest_collection_modifyitems(config, items):  # noqa: ARG001
    for item in items:
        # Tests under test/oracle or of the verify suite build explicit bundles
        if any(f"test/{name}" in item.nodeid for name in ORACLE_MODULES):
            item.add_marker(pytest.mark.oracle)
