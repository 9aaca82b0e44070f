import pytest

from cosetlattice import groups as gr
from cosetlattice.catalog import find_entry, load_fixtures
from cosetlattice.lattice import build_interval
from cosetlattice.perm import stabilizer


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


def _point_interval(entries, degree, ident):
    G = find_entry(entries, degree, ident).group()
    return build_interval(stabilizer(G, 0), G)


@pytest.fixture(scope="session")
def c6():
    G = gr.cyclic(6)
    return build_interval(G.trivial(), G)


@pytest.fixture(scope="session")
def s3():
    G = gr.symmetric(3)
    return build_interval(G.trivial(), G)


@pytest.fixture(scope="session")
def d8_psl(fixtures):
    return _point_interval(fixtures, 21, 100)


@pytest.fixture(scope="session")
def s3_psl(fixtures):
    return _point_interval(fixtures, 28, 100)


@pytest.fixture(scope="session")
def f20_on_10(fixtures):
    return _point_interval(fixtures, 10, 4)


@pytest.fixture
def interval_of():
    def make(G, H=None):
        return build_interval(G.trivial() if H is None else H, G)

    return make


@pytest.fixture(autouse=True)
def _restore_limits():
    from dataclasses import asdict

    from cosetlattice.config import limits, set_limits

    saved = asdict(limits())
    yield
    set_limits(**saved)
