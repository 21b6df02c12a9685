"""Shared fixtures: catalog entries plus a directory of serialized files."""
import pytest

from invder import catalog, save_algebra


@pytest.fixture(scope="session")
def entries():
    return {e.id: e for e in catalog()}


@pytest.fixture(scope="session")
def algebra_dir(tmp_path_factory):
    """Every catalog entry written to disk once, for file-based tests."""
    out = tmp_path_factory.mktemp("algebras")
    for e in catalog():
        save_algebra(e.document, str(out / f"{e.id}.json"))
    return out
