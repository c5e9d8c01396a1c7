import pytest

from cansyz.curves import random_canonical_curve


@pytest.fixture(scope="session")
def curve_cache():
    cache = {}

    def get(g, p, seed, gonality=None):
        key = (g, p, seed, gonality)
        if key not in cache:
            cache[key] = random_canonical_curve(g, p, seed, gonality=gonality)
        return cache[key]

    return get
