"""
Unit test configuration.

Every test collected under tests/unit gets the ``unit`` marker.
"""

import pytest


def pytest_collection_modifyitems(config, items):
    for item in items:
        if "/tests/unit/" in str(item.fspath).replace("\\", "/"):
            item.add_marker(pytest.mark.unit)
