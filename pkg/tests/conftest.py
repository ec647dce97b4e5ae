import json
from pathlib import Path

import pytest

from windsent.config import RunConfig
from windsent.lexicons import load_lexicon_set

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def golden_corpus_path() -> Path:
    return GOLDEN_DIR / "corpus.jsonl"


@pytest.fixture(scope="session")
def manifest() -> dict:
    return json.loads((GOLDEN_DIR / "manifest.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def lexicons():
    return load_lexicon_set()


@pytest.fixture()
def golden_config(golden_corpus_path, tmp_path) -> RunConfig:
    return RunConfig(
        input_path=golden_corpus_path,
        input_format="jsonl",
        out_dir=tmp_path / "out",
    )
