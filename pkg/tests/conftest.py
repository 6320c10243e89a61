import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from corpus import corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus_entries():
    return corpus()
