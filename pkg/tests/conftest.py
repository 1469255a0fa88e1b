import pytest

from matchmoments.moments import moment_table_range


@pytest.fixture(scope="session")
def tables_60():
    return moment_table_range(1, 60, 14)


@pytest.fixture(scope="session")
def tables_200():
    return moment_table_range(1, 200, 2)
