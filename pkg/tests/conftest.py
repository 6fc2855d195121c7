import pytest

from moritakit import CorpusSpec, generate_corpus, group_as_groupoid


def cyclic(n):
    return list(range(n)), {(a, b): (a + b) % n for a in range(n) for b in range(n)}


@pytest.fixture(scope="session")
def z2():
    return group_as_groupoid(*cyclic(2))


@pytest.fixture(scope="session")
def z3():
    return group_as_groupoid(*cyclic(3))


@pytest.fixture(scope="session")
def trivial_group():
    return group_as_groupoid(*cyclic(1))


@pytest.fixture(scope="session")
def default_corpus():
    return generate_corpus(CorpusSpec())


@pytest.fixture(scope="session")
def small_corpus():
    return generate_corpus(CorpusSpec(max_objects=2, max_arrows=4, max_carrier=4))
