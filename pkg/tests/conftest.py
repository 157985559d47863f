import pytest

from atlq.config import get_config, set_config


@pytest.fixture(autouse=True)
def _restore_config():
    # the CLI swaps the global config; keep tests independent
    old = get_config()
    yield
    set_config(old)
