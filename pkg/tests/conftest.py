from pathlib import Path

import pytest

from trielang import Alphabet

REPO_ROOT = Path(__file__).resolve().parent.parent
GRAMMAR_DIR = REPO_ROOT / "grammars"


@pytest.fixture
def ab() -> Alphabet:
    return Alphabet("ab")
