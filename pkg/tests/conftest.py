import pytest

from logsine.exact_core import bernoulli_table


@pytest.fixture(scope="session")
def table_202():
    """Shared Bernoulli table covering every sweep in the suite."""
    return bernoulli_table(202)
