import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
FIXTURES = TESTS_DIR / "fixtures"

# make tests/oracles.py and tests/generators.py importable as plain modules
sys.path.insert(0, str(TESTS_DIR))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def package_only_text() -> str:
    return (FIXTURES / "package_only.json").read_text(encoding="utf-8")


@pytest.fixture
def rai_sample_text() -> str:
    return (FIXTURES / "rai_sample.json").read_text(encoding="utf-8")


@pytest.fixture
def consent_policy_text() -> str:
    return (FIXTURES / "policy_require_consent.json").read_text(encoding="utf-8")
