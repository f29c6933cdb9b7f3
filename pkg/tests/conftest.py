import pytest

from exlat.fp import Matrix
from exlat.quiver import Arrow, Quiver, linear_quiver


@pytest.fixture(scope="session")
def a3_sink():
    """The quiver 1 -> 2 <- 3 (sink in the middle)."""
    return Quiver(("1", "2", "3"), (Arrow("1", "2", "a"), Arrow("3", "2", "b")))


@pytest.fixture(scope="session")
def a3_source():
    """The quiver 1 <- 2 -> 3 (source in the middle)."""
    return Quiver(("1", "2", "3"), (Arrow("2", "1", "a"), Arrow("2", "3", "b")))


@pytest.fixture(scope="session")
def a2():
    return Quiver(("1", "2"), (Arrow("1", "2", "a"),))


@pytest.fixture(scope="session")
def a1():
    return Quiver(("1",), ())


@pytest.fixture(scope="session")
def a4():
    return linear_quiver(4)


def rep_of_dims(quiver, p, dims, maps=None):
    from exlat.rep import Representation

    return Representation.build(quiver, p, dims, maps)


@pytest.fixture(scope="session")
def a3_reps(a3_sink):
    """Canonical forms of the six indecomposables on 1 -> 2 <- 3 over F_2."""
    from exlat.rep import Representation

    q, p = a3_sink, 2
    one = Matrix.identity(p, 1)
    return {
        "S1": Representation.build(q, p, {"1": 1}),
        "S2": Representation.build(q, p, {"2": 1}),
        "S3": Representation.build(q, p, {"3": 1}),
        "P1": Representation.build(q, p, {"1": 1, "2": 1}, {"a": one}),
        "P3": Representation.build(q, p, {"2": 1, "3": 1}, {"b": one}),
        "I2": Representation.build(q, p, {"1": 1, "2": 1, "3": 1}, {"a": one, "b": one}),
    }


@pytest.fixture(scope="session")
def a3_catalog(a3_sink):
    from exlat.catalog import build_catalog

    return build_catalog(a3_sink, p=2)


@pytest.fixture(scope="session")
def a3_source_catalog(a3_source):
    from exlat.catalog import build_catalog

    return build_catalog(a3_source, p=2)


@pytest.fixture(scope="session")
def a4_catalog(a4):
    from exlat.catalog import build_catalog

    return build_catalog(a4, p=2)


def ar_indices_by_right_dim(catalog, *dim_vectors):
    """AR-sequence indices selected by the dimension vectors of their right terms."""
    out = []
    for dv in dim_vectors:
        matches = [s.index for s in catalog.ar_sequences if catalog.indecomposables[s.right_index].dim == tuple(dv)]
        assert len(matches) == 1, f"right term {dv} matched {matches}"
        out.append(matches[0])
    return frozenset(out)
