import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_walls():
    """Every proper wall of at most 10 blocks, per (family, n, lam)."""
    from wallforge.affine import affine_data
    from wallforge.wall import enumerate_by_size

    out = {}
    for family, n in [("A1", 2), ("A1", 3), ("A2even", 1), ("A2even", 2), ("D2", 2), ("A2odd", 3),
                      ("D1", 3), ("B1", 3)]:
        d = affine_data(family, n)
        for lam in d.level1_weights:
            out[(family, n, lam)] = enumerate_by_size(d, lam, 10)
    return out
