from __future__ import annotations

import numpy as np
import pytest

from qtwist.uqsl2 import standard_data


@pytest.fixture(scope="session")
def data13():
    return standard_data(1.3)


@pytest.fixture(scope="session")
def data07():
    return standard_data(0.7)


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    """Record a PASS/FAIL line for the acceptance summary, then assert."""

    def record(number: int, ok: bool, what: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {what}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
