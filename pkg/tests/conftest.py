import pytest

from sameorder import group_for


@pytest.fixture(scope="session")
def built():
    """Shared group builder so expensive closures run once per session."""
    cache = {}

    def get(expr: str):
        if expr not in cache:
            cache[expr] = group_for(expr)
        return cache[expr]

    return get
