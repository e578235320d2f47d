import pytest

from snacs_hi import GOLD_CORPUS_PATH, Toolkit
from snacs_hi.corpus import parse_file


@pytest.fixture(scope="session")
def toolkit():
    return Toolkit()


@pytest.fixture(scope="session")
def hierarchy(toolkit):
    return toolkit.hierarchy


@pytest.fixture(scope="session")
def lexicon(toolkit):
    return toolkit.lexicon


@pytest.fixture(scope="session")
def matcher(toolkit):
    return toolkit.matcher


@pytest.fixture(scope="session")
def validator(toolkit):
    return toolkit.validator


@pytest.fixture(scope="session")
def gold_bytes():
    return GOLD_CORPUS_PATH.read_bytes()


@pytest.fixture(scope="session")
def gold_doc(gold_bytes):
    docs = parse_file(gold_bytes)
    assert len(docs) == 1
    return docs[0]
