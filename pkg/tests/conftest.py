import pytest

from chordbook.link_model import build_link, round_unknot


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])


@pytest.fixture
def unknot():
    return round_unknot()


@pytest.fixture
def hopf():
    return build_link([("cup", 1), ("cup", 1), ("xg", 2, 2, "ccw"), ("cap", 1), ("cap", 1)], ["+", "-"])
