from importlib import resources
from pathlib import Path

import pytest

from etnorm.lexicon import default_config
from etnorm.scoring import load_gold

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def config():
    return default_config()


@pytest.fixture(scope="session")
def gold_corpus_path(tmp_path_factory):
    # materialize the packaged corpus so path-based loaders can use it
    text = resources.files("etnorm.data").joinpath("gold_corpus.jsonl").read_text("utf-8")
    path = tmp_path_factory.mktemp("corpus") / "gold_corpus.jsonl"
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def gold_corpus(gold_corpus_path):
    return load_gold(gold_corpus_path)
