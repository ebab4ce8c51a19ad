from functools import lru_cache

import pytest

from bruric.groups import CoxeterSpec, enumerate_group
from bruric.hasse import build_hasse


@lru_cache(maxsize=None)
def table(family, rank=None, m=None):
    return enumerate_group(CoxeterSpec.parse(family, rank, m))


@lru_cache(maxsize=None)
def hasse(family, rank=None, m=None):
    return build_hasse(table(family, rank, m))


@pytest.fixture
def get_table():
    return table


@pytest.fixture
def get_hasse():
    return hasse
