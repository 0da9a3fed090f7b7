import pytest

from diraclinear._kernels import warm_up


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # JIT-compile the RK4 kernel once (cached across runs) so timed tests
    # measure the algorithms, not compiler latency
    warm_up()
