import pathlib

import pytest
from hypothesis import settings

ROOT = pathlib.Path(__file__).resolve().parent.parent

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def repo_root() -> pathlib.Path:
    return ROOT


@pytest.fixture
def in_repo_root(monkeypatch) -> pathlib.Path:
    monkeypatch.chdir(ROOT)
    return ROOT
