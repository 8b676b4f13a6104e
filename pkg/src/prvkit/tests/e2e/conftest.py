"""Pytest fixtures for prvkit end-to-end tests."""
from __future__ import annotations

import pytest

from prvkit.tests.e2e.helpers import Workdir


@pytest.fixture
def workdir(tmp_path) -> Workdir:
    """An empty work directory whose parent serves as HOME."""
    path = tmp_path / "work"
    path.mkdir()
    return Workdir(path=path)


@pytest.fixture
def compact_workdir(workdir) -> Workdir:
    """A work directory whose .prvkitconfig turns on one-line reports."""
    workdir.write_config("[UI]\ncompact = True\n")
    return workdir
