"""Shared fixtures: compiled session environment and per-script reports."""

import pytest

from fibwalk import logic
from fibwalk import repetitions as rp


@pytest.fixture(scope="session")
def env():
    return rp.session_env()


@pytest.fixture(scope="session")
def script_report():
    """Run a shipped script at most once per test session, keyed by name."""
    cache = {}

    def run(name):
        if name not in cache:
            cache[name] = logic.run_session(rp.script_text(name))
        return cache[name]

    return run
