import hypothesis
import numpy as np
import pytest

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

# Printed alpha=1 masks, third row of raw Mx taken all-negative.
PUBLISHED_RAW_MX = {
    2.0: [[0.6951, 1.5025, 0.9850], [0, 0, 0], [-0.3538, -0.7648, -0.5014]],
    3.0: [[0.1550, 1.2799, 0.9149], [0.1785, 1.4738, 1.0535], [-0.2606, -2.1526, -1.5388]],
}
PUBLISHED_NORM_MX = {
    2.0: [[0.2184, 0.4721, 0.3095], [0, 0, 0], [-0.2184, -0.4721, -0.3095]],
    3.0: [[0.0307, 0.2532, 0.1810], [0.0353, 0.2915, 0.2084], [-0.0660, -0.5447, -0.3894]],
}
PUBLISHED_NORM_MY = {
    2.0: [[0.2184, 0, -0.2184], [0.4721, 0, -0.4721], [0.3095, 0, -0.3095]],
    3.0: [[0.0307, 0.0353, -0.0660], [0.2532, 0.2915, -0.5447], [0.1810, 0.2084, -0.3894]],
}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
