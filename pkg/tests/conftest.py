"""Shared fixtures for the test suite."""

from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from potgraph.catalogs import load_catalog
from potgraph.graphs import pattern_k6_c5


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def pattern():
    return pattern_k6_c5()


@pytest.fixture()
def catalog_dir(tmp_path) -> Path:
    """A writable copy of the packaged catalog directory."""
    import potgraph

    src = Path(potgraph.__file__).parent / "data"
    dst = tmp_path / "catalog"
    dst.mkdir()
    for name in src.glob("*.txt"):
        shutil.copy(name, dst / name.name)
    return dst
