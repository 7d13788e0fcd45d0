import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(monkeypatch):
    # Keep a user-level table cache from leaking into test runs.
    monkeypatch.delenv("PEGBALL_CACHE", raising=False)
