import pytest
from hypothesis import settings
from hypothesis import strategies as st

from poncelet.field import odd_primes

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SMALL_PRIMES = odd_primes(31)
MEDIUM_PRIMES = odd_primes(100)

small_primes = st.sampled_from(SMALL_PRIMES)


@pytest.fixture(scope="session")
def pencils():
    """One shared pencil per small prime; conic caches stay warm across tests."""
    from poncelet.pencil import Pencil

    return {p: Pencil(p) for p in odd_primes(60)}


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = report.nodeid.split("::")[-1]
        _ACCEPTANCE[label] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE):
        status = "PASS" if _ACCEPTANCE[label] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")
