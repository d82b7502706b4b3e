import pytest

from hclab.bernoulli import BernoulliCache


@pytest.fixture(scope="session")
def cache():
    """One shared in-memory Bernoulli cache so the O(n^2) recurrence is paid
    once for the whole run."""
    return BernoulliCache()
