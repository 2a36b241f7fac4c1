import numpy as np
import pytest

from pauli_discrim.channels import BETA


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def bell_projector():
    return np.outer(BETA, BETA.conj())


def pytest_terminal_summary(terminalreporter):
    reports = [r for r in terminalreporter.stats.get("passed", []) + terminalreporter.stats.get("failed", [])
               if "test_acceptance" in r.nodeid and r.when == "call"]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(reports, key=lambda r: r.nodeid):
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{status}  {rep.nodeid.split('::')[-1]}")
