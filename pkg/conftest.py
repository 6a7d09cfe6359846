# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
# Based on Sybil documentation: https://sybil.readthedocs.io/en/latest/quickstart.html
from doctest import ELLIPSIS, NORMALIZE_WHITESPACE
from typing import Any

import numpy as np
import pytest
from sybil import Sybil
from sybil.parsers.rest import DocTestParser, PythonCodeBlockParser, SkipParser

import splitline as sl


def setup(namespace: dict[str, Any]):
    namespace |= {"sl": sl, "np": np}


pytest_collect_file = Sybil(
    parsers=[
        DocTestParser(optionflags=ELLIPSIS | NORMALIZE_WHITESPACE),
        PythonCodeBlockParser(),
        SkipParser(),
    ],
    patterns=["docs/source/*.rst", "*.py"],
    excludes=["examples/*", "conftest.py"],
    setup=setup,
    name="sybil",
).pytest()


def pytest_collection_modifyitems(items):
    for item in items:
        if "sybil" in item.nodeid:
            item.add_marker(pytest.mark.docs)
