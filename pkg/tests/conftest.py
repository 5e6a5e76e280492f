from __future__ import annotations

import pytest

from wreathvo import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Run a test once per available arithmetic kernel."""
    previous = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
