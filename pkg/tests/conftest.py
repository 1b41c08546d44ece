import pytest

from segburst import ChannelParams, LabelingScheme, build_codebook

# criterion number -> (passed, summary), filled by test_acceptance.py
ACCEPTANCE: dict = {}

BINARY_PARAMS = ChannelParams(q=2, b=8, t=2, gamma=2, delta=16, rho=8)
BINARY_SCHEME = LabelingScheme(17, 2, 2)
TERNARY_PARAMS = ChannelParams(q=3, b=9, t=2, gamma=2, delta=16, rho=9)
TERNARY_SCHEME = LabelingScheme(19, 41, 2)


@pytest.fixture(scope="session")
def binary_book():
    return build_codebook(BINARY_PARAMS, BINARY_SCHEME)


@pytest.fixture(scope="session")
def ternary_book():
    return build_codebook(TERNARY_PARAMS, TERNARY_SCHEME)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, summary = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {summary}")
