"""Shared fixtures: memoized catalog groups and character tables.

Building a BSGS or a character table twice per session is pure waste, so
groups and tables are cached per catalog name for the whole run.
"""

import pytest

from blockheight.catalog import default_catalog
from blockheight.chartab import character_table


@pytest.fixture(scope="session")
def catalog_map():
    return {entry.name: entry for entry in default_catalog()}


@pytest.fixture(scope="session")
def group(catalog_map):
    cache = {}

    def build(name):
        if name not in cache:
            cache[name] = catalog_map[name].build()
        return cache[name]

    return build


@pytest.fixture(scope="session")
def table(group):
    cache = {}

    def build(name):
        if name not in cache:
            cache[name] = character_table(group(name))
        return cache[name]

    return build
