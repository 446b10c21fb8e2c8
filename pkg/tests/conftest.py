"""Shared pytest setup: src/ on sys.path the way the tools do it, and a clean
configuration / bracket state around every test."""

import sys
from pathlib import Path

import pytest

_ROOT_DIR = Path(__file__).resolve().parent.parent
_SRC_DIR = _ROOT_DIR / "src"
for path in (_SRC_DIR, _ROOT_DIR):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from liealg import bracket_fault_enabled, set_bracket_fault  # noqa: E402
from utils.minrep_config import reset_minrep_config  # noqa: E402

MINREP_ENV = ("MINREP_THREADS", "MINREP_MAX_WORD", "MINREP_OUTPUT")


@pytest.fixture(autouse=True)
def clean_state(monkeypatch):
    for name in MINREP_ENV:
        monkeypatch.delenv(name, raising=False)
    reset_minrep_config()
    yield
    if bracket_fault_enabled():
        set_bracket_fault(False)
    reset_minrep_config()
