import pytest


@pytest.fixture(scope="session")
def cache(tmp_path_factory):
    """Shared character-table cache so each group is computed once."""
    return str(tmp_path_factory.mktemp("table-cache"))


@pytest.fixture(scope="session")
def h4data(cache):
    from polyreal.h4 import h4_group
    return h4_group(cache_dir=cache)
