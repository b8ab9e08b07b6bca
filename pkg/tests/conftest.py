import pytest

from tesstopo.complexes import build_complex, generate


@pytest.fixture(scope="session")
def built():
    """Session cache of built complexes; building is the expensive step."""
    cache = {}

    def get(name, **kw):
        key = (name, tuple(sorted(kw.items())))
        if key not in cache:
            cache[key] = build_complex(generate(name, **kw))
        return cache[key]

    return get
